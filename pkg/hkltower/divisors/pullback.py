"""This module contains the pullback matrices of the tower maps.

Every matrix is a dict sending each basis key of the codomain to its image
class on the domain. λ pulls back to λ along every map. The f matrices
branch on N mod 8 the same way the normal bundle formulas do.
"""
import logging

import sympy

from hkltower.divisors.divisor_class import DivisorClass
from hkltower.divisors.maps import MapLabel
from hkltower.divisors.space_label import (
    H0,
    HH,
    HN,
    HU,
    HXI,
    HZETA,
    HZETA_PRIME,
    LAMBDA,
    SpaceLabel,
)
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.map_kind import MapKind
from hkltower.exceptions import SpaceMismatchError

logger = logging.getLogger(__name__)

_STABLE_KEYS = {
    DiscLabel.xi: HXI,
    DiscLabel.zeta: HZETA,
    DiscLabel.zeta_prime: HZETA_PRIME,
}


def _f_images(n: int) -> dict[str, dict]:
    residue = n % 8
    hn = {HN: 1, HH: 2}
    hh = {LAMBDA: -2, HH: 1}
    if residue == 5:
        hn[HU] = 1
        hu = {HU: 1}
    elif residue == 3:
        hu = {}
    else:
        hu = {HU: 2}
    if residue == 4:
        hh[HU] = 1
    return {HN: hn, HH: hh, HU: hu}


def _images(label: MapLabel) -> dict[str, dict]:
    half = sympy.Rational(1, 2)
    if label.kind is MapKind.f:
        return _f_images(label.index)
    if label.kind is MapKind.l:
        return {HN: {HN: 1}, HH: {}, HU: {LAMBDA: -2}}
    if label.kind is MapKind.m:
        return {HN: {HN: 1}, HH: {HU: 2}, HU: {LAMBDA: -2, HU: 1}}
    if label.kind is MapKind.q:
        return {
            HN: {HN: 1, HU: 2},
            HH: {HU: 2},
            HU: {LAMBDA: -1, HU: 3 * half},
        }
    if label.kind is MapKind.p:
        return {HN: {HN: 1}, HU: {LAMBDA: -2}}
    if label.kind is MapKind.r:
        return {HN: {HN: 1, HU: 3}, HU: {LAMBDA: -1, HU: 1}}
    return {HN: {H0: 1}, HH: {HXI: 2}, HU: {HZETA: 1, HZETA_PRIME: 1}}


def pullback_matrix(label: MapLabel) -> dict[str, DivisorClass]:
    """Get the image of every basis class of the codomain.

    Images of H_u on a domain without a unigonal divisor must vanish; they
    are dropped after that check.

    Raises
    ------
    SpaceMismatchError
        If an image lands on a class the domain does not have
    """
    domain = label.domain
    codomain = label.codomain
    images = _images(label)
    matrix = {LAMBDA: DivisorClass.basis_class(domain, LAMBDA)}
    for key in codomain.basis:
        if key == LAMBDA:
            continue
        coeffs = images[key]
        if HU in coeffs and HU not in domain.basis:
            raise SpaceMismatchError(
                f"ERROR: {label}* {key} has an H_u term but {domain} has no H_u"
            )
        matrix[key] = DivisorClass(domain, coeffs)
    return matrix


def pullback(label: MapLabel, divisor: DivisorClass) -> DivisorClass:
    """Pull a class on the codomain of a map back to its domain.

    Parameters
    ----------
    label: MapLabel
        The map
    divisor: DivisorClass
        A class on label.codomain

    Returns
    -------
    image: DivisorClass
        The pulled back class on label.domain

    Raises
    ------
    SpaceMismatchError
        If the class does not live on the codomain
    """
    if divisor.space != label.codomain:
        raise SpaceMismatchError(
            f"ERROR: {label} pulls back classes on {label.codomain}, "
            f"got {divisor.space}"
        )
    matrix = pullback_matrix(label)
    image = DivisorClass.zero(label.domain)
    for key, value in divisor.coeffs.items():
        image = image + matrix[key] * value
    logger.debug("%s* (%s) = %s", label, divisor.terms(), image.terms())
    return image


def pullback_path(path: list[MapLabel], divisor: DivisorClass) -> DivisorClass:
    """Pull a class back along maps ordered from the outermost space inward."""
    for label in path:
        divisor = pullback(label, divisor)
    return divisor


def pushforward_rho(
    n: int, divisor: DivisorClass, decoration: DiscLabel = DiscLabel.xi
) -> DivisorClass:
    """Push a class on the stable quotient down to F(N), N even.

    ρ_*λ̃ = 2λ and ρ_*H_0 = 2H_n. The Heegner class of the decoration goes
    to H_h and the other two nonzero classes go to H_u, or to zero when N is
    2 mod 8 and F(N) has no unigonal divisor.

    Raises
    ------
    SpaceMismatchError
        If N is odd or the class is not on FStable(N)
    """
    if n % 2:
        raise SpaceMismatchError(f"ERROR: ρ_* needs N even, got {n}")
    stable = SpaceLabel.FStable(n)
    if divisor.space != stable:
        raise SpaceMismatchError(
            f"ERROR: ρ_* acts on classes on {stable}, got {divisor.space}"
        )
    target = SpaceLabel.F(n)
    decorated = _STABLE_KEYS[decoration]
    unigonal = {HU: 1} if target.has_unigonal else {}
    images = {LAMBDA: {LAMBDA: 2}, H0: {HN: 2}}
    for key in _STABLE_KEYS.values():
        images[key] = {HH: 1} if key == decorated else unigonal
    image = DivisorClass.zero(target)
    for key, value in divisor.coeffs.items():
        image = image + DivisorClass(target, images[key]) * value
    return image
