"""This module contains the Borcherds relations of the D-tower.

The quasi-pullback of Φ₁₂ through an embedding with complement of root count
2w - 24 is a modular form of weight w for the stable group, with divisor
Σ a_η H_η. On the stable quotient this gives
2w λ̃ = a_0 H_0 + ε a_ξ H_ξ + τ a_ζ (H_ζ + H_ζ'), the factors counting the
branching of non reflective Heegner divisors. For N odd the stable quotient
is F(N); for N even the relation is pushed down by the double cover ρ.
"""
import logging

import sympy

from hkltower.borcherds.heegner import quasi_pullback_weight
from hkltower.borcherds.relation import Relation
from hkltower.divisors.pullback import pushforward_rho
from hkltower.divisors.space_label import (
    H0,
    HH,
    HN,
    HU,
    HXI,
    HZETA,
    HZETA_PRIME,
    SpaceLabel,
)
from hkltower.dtower.invariants import tau
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.embedding_variant import EmbeddingVariant
from hkltower.enums.group_kind import GroupKind
from hkltower.enums.provenance import Provenance
from hkltower.exceptions import ConsistencyError, RangeError, require_range
from hkltower.managers.embedding_manager import EmbeddingManager
from hkltower.settings import FIRST_RELATION_MAX_N, MIN_N, SECOND_RELATION_MAX_N

logger = logging.getLogger(__name__)

_VARIANTS = {
    Provenance.first: EmbeddingVariant.D,
    Provenance.second: EmbeddingVariant.E8D,
}

# stable Heegner key renamed on F(N) for N odd
_ODD_KEYS = {H0: HN, HXI: HH, HZETA: HU}


def epsilon(n: int) -> int:
    """Get ε(N): 1 for N odd, 2 for N even."""
    return 1 if n % 2 else 2


def _check_n(n: int, provenance: Provenance) -> None:
    high = (
        FIRST_RELATION_MAX_N
        if provenance is Provenance.first
        else SECOND_RELATION_MAX_N
    )
    require_range("N", n, MIN_N, high)


def stable_relation(n: int, which: Provenance = Provenance.first) -> Relation:
    """Get the relation on the stable quotient FStable(N).

    Parameters
    ----------
    n: int
        N, in 3..25 for the first relation and 3..17 for the second
    which: Provenance
        first or second

    Raises
    ------
    RangeError
        If N is out of range or which is gritsenko
    """
    which = Provenance(which)
    if which not in _VARIANTS:
        raise RangeError("ERROR: the stable relation is first or second")
    _check_n(n, which)
    manager = EmbeddingManager()
    embedding = manager.embedding(n, _VARIANTS[which])
    weight = quasi_pullback_weight(embedding)
    a = manager.coefficients(n, _VARIANTS[which])
    unigonal = tau(n) * a[DiscLabel.zeta]
    coeffs = {
        H0: a[DiscLabel.zero],
        HXI: epsilon(n) * a[DiscLabel.xi],
        HZETA: unigonal,
    }
    if n % 2 == 0:
        coeffs[HZETA_PRIME] = tau(n) * a[DiscLabel.zeta_prime]
    return Relation(
        n, SpaceLabel.FStable(n), GroupKind.stable, which, 2 * weight, coeffs
    )


def _decorated(
    n: int, which: Provenance, decoration: DiscLabel = DiscLabel.xi
) -> Relation:
    stable = stable_relation(n, which)
    if n % 2:
        coeffs = {_ODD_KEYS[key]: value for key, value in stable.coeffs.items()}
        relation = Relation(
            n, SpaceLabel.F(n), GroupKind.decorated, which, stable.lhs, coeffs
        )
    else:
        image = pushforward_rho(n, stable.as_class(), decoration)
        relation = Relation.from_class(
            n, GroupKind.decorated, which, image * sympy.Rational(1, 2)
        )
    logger.info("N=%d %s relation: %s", n, which.value, relation)
    return relation


def first_relation(
    n: int,
    decoration: DiscLabel = DiscLabel.xi,
    group: GroupKind = GroupKind.decorated,
) -> Relation:
    """Get the first Borcherds relation on F(N), or on FStable(N).

    With the decoration ζ at N = 6 mod 8 the relation reads
    2(12 + (26-N)(25-N))λ = H_n + 2(26-N)H_u.

    Raises
    ------
    RangeError
        If N is outside 3..25, or a decoration other than ξ is asked for N
        not 6 mod 8
    """
    decoration = DiscLabel(decoration)
    if decoration is not DiscLabel.xi and (
        decoration is DiscLabel.zero or n % 8 != 6
    ):
        raise RangeError(f"ERROR: decoration {decoration.value} is not used at N={n}")
    if GroupKind(group) is GroupKind.stable:
        return stable_relation(n, Provenance.first)
    _check_n(n, Provenance.first)
    return _decorated(n, Provenance.first, decoration)


def second_relation(n: int, group: GroupKind = GroupKind.decorated) -> Relation:
    """Get the second Borcherds relation, N in 3..17."""
    if GroupKind(group) is GroupKind.stable:
        return stable_relation(n, Provenance.second)
    _check_n(n, Provenance.second)
    return _decorated(n, Provenance.second)


def gritsenko_relation(n: int) -> Relation:
    """Get the difference of the first and second relations.

    It reads 32(14-N)λ = 16H_h + τ(μ(N) - μ(N+8))H_u.

    Raises
    ------
    ConsistencyError
        If H_n does not cancel
    """
    _check_n(n, Provenance.second)
    difference = first_relation(n).as_class() - second_relation(n).as_class()
    if difference.coeff(HN) != 0:
        raise ConsistencyError(f"ERROR: H_n does not cancel at N={n}")
    return Relation.from_class(
        n, GroupKind.decorated, Provenance.gritsenko, difference
    )


def relation(
    n: int,
    provenance: Provenance,
    group: GroupKind = GroupKind.decorated,
    decoration: DiscLabel = DiscLabel.xi,
) -> Relation:
    """Get a relation by provenance."""
    provenance = Provenance(provenance)
    if provenance is Provenance.first:
        return first_relation(n, decoration, group)
    if provenance is Provenance.second:
        return second_relation(n, group)
    if GroupKind(group) is GroupKind.stable:
        raise RangeError("ERROR: the Gritsenko relation lives on F(N)")
    return gritsenko_relation(n)


def mu_table(low: int = MIN_N, high: int = FIRST_RELATION_MAX_N) -> dict[int, int]:
    """Compute μ(N) = a_ζ of the D embedding for N in low..high."""
    require_range("N", low, MIN_N, FIRST_RELATION_MAX_N)
    require_range("N", high, low, FIRST_RELATION_MAX_N)
    manager = EmbeddingManager()
    return {
        n: manager.coefficients(n, EmbeddingVariant.D)[DiscLabel.zeta]
        for n in range(low, high + 1)
    }
