"""This module contains the quasi-pullback weights and Heegner coefficients.

The coefficient of the Heegner divisor of η in the quasi-pullback of Φ₁₂ is
a_η = (|R(Sat<v_η, Λ_N^⊥>)| - |R(Λ_N^⊥)|) / 2 for a minimal norm vector v_η
whose class is η.
"""
import logging

from hkltower.borcherds.embedding import Embedding
from hkltower.dict_structures.heegner_dict import HeegnerDict
from hkltower.dtower.decorated_lattice import DecoratedDLattice
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.embedding_variant import EmbeddingVariant
from hkltower.exceptions import ConsistencyError
from hkltower.tower_data import mu_table

logger = logging.getLogger(__name__)


def closed_form_weight(n: int, variant: EmbeddingVariant) -> int:
    """Get 12 + (26-N)(25-N) for D and 132 + (18-N)(17-N) for E8D."""
    if EmbeddingVariant(variant) is EmbeddingVariant.D:
        return 12 + (26 - n) * (25 - n)
    return 132 + (18 - n) * (17 - n)


def quasi_pullback_weight(embedding: Embedding) -> int:
    """Get the weight 12 + |R(complement)|/2, checked against the closed form.

    Raises
    ------
    ConsistencyError
        If the root count gives another weight
    """
    weight = embedding.weight
    expected = closed_form_weight(embedding.n, embedding.variant)
    if weight != expected:
        raise ConsistencyError(
            f"ERROR: weight {weight} of {embedding!r} differs from {expected}"
        )
    return weight


def expected_coefficients(n: int, variant: EmbeddingVariant) -> dict[DiscLabel, int]:
    """Get the closed forms a_0 = 1, a_ξ = 2m and a_ζ = a_ζ' = μ."""
    if EmbeddingVariant(variant) is EmbeddingVariant.D:
        a_xi, mu = 2 * (26 - n), mu_table[n]
    else:
        a_xi, mu = 2 * (18 - n), mu_table[n + 8]
    return {
        DiscLabel.zero: 1,
        DiscLabel.xi: a_xi,
        DiscLabel.zeta: mu,
        DiscLabel.zeta_prime: mu,
    }


def heegner_coefficients(embedding: Embedding) -> dict[DiscLabel, int]:
    """Compute a_η for the four labels by saturating and counting roots.

    A label without a minimal vector, ζ and ζ' for N = 2 mod 8, gets 0.
    """
    dlattice = DecoratedDLattice(embedding.n)
    base = embedding.complement_roots
    coefficients = {}
    for label in DiscLabel:
        vector = dlattice.minimal_vector(label)
        if vector is None:
            coefficients[label] = 0
            continue
        extra = embedding.saturated_roots(vector) - base
        if extra % 2:
            raise ConsistencyError(
                f"ERROR: odd root surplus {extra} for {label.value} in {embedding!r}"
            )
        coefficients[label] = extra // 2
    logger.info(
        "Heegner coefficients of %r: %s",
        embedding,
        {label.value: value for label, value in coefficients.items()},
    )
    return coefficients


def heegner_report(
    embedding: Embedding, computed: dict[DiscLabel, int] | None = None
) -> HeegnerDict:
    """Compare the computed coefficients with the closed forms."""
    if computed is None:
        computed = heegner_coefficients(embedding)
    expected = expected_coefficients(embedding.n, embedding.variant)
    return {
        "N": embedding.n,
        "variant": embedding.variant.value,
        "weight": embedding.weight,
        "computed": {label.value: value for label, value in computed.items()},
        "expected": {label.value: value for label, value in expected.items()},
        "matches": computed == expected
        and embedding.weight == closed_form_weight(embedding.n, embedding.variant),
    }


def check_heegner(
    embedding: Embedding, computed: dict[DiscLabel, int] | None = None
) -> dict[DiscLabel, int]:
    """Get the coefficients after checking them against the closed forms.

    Raises
    ------
    ConsistencyError
        If a computed coefficient differs from its closed form
    """
    if computed is None:
        computed = heegner_coefficients(embedding)
    expected = expected_coefficients(embedding.n, embedding.variant)
    wrong = [
        f"{label.value}: {computed[label]} != {expected[label]}"
        for label in DiscLabel
        if computed[label] != expected[label]
    ]
    if wrong:
        raise ConsistencyError(
            f"ERROR: Heegner coefficients of {embedding!r} differ from the closed "
            f"forms ({', '.join(wrong)})"
        )
    return computed
