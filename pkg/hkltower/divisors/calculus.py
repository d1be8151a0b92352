"""This module contains the divisor class calculus of the tower.

Canonical and branch classes, the polarization λ + βΔ(N) and its restriction
along composition paths, the pullback of Δ(N) along f_N, the curve fixtures
of F(19) and the class expression parser.
"""
import logging
import re

import sympy

from hkltower.divisors.divisor_class import DivisorClass, lambda_class
from hkltower.divisors.maps import MapLabel, check_path
from hkltower.divisors.pullback import pullback, pullback_path
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
from hkltower.dtower.boundary import boundary_divisor
from hkltower.enums.map_kind import MapKind
from hkltower.enums.space_kind import SpaceKind
from hkltower.exceptions import (
    ClassExpressionError,
    ConsistencyError,
    SpaceMismatchError,
    require_range,
)
from hkltower.rationals import as_rational
from hkltower.settings import MIN_N
from hkltower.tower_data import curve_rows

logger = logging.getLogger(__name__)

HALF = sympy.Rational(1, 2)

# unigonal tails a restriction path may end with, after the f maps
TAILS = (
    (),
    (MapKind.l,),
    (MapKind.m,),
    (MapKind.m, MapKind.p),
    (MapKind.q,),
    (MapKind.q, MapKind.r),
    (MapKind.q, MapKind.r, MapKind.p),
)

# accepted spellings of the basis keys in class expressions
_NAMES = {
    "lambda": LAMBDA,
    "λ": LAMBDA,
    "hn": HN,
    "hh": HH,
    "hu": HU,
    "h0": H0,
    "hxi": HXI,
    "hzeta": HZETA,
    "hzeta'": HZETA_PRIME,
    "hzeta_prime": HZETA_PRIME,
}

_TERM = re.compile(
    r"(?P<sign>[+-]?)(?P<coeff>\d+(?:/\d+)?)?(?P<star>\*?)(?P<name>[A-Za-zλ_0-9']+)"
)


def branch_divisor(n: int) -> DivisorClass:
    """Get B(N) = H_n + 2Δ(N)."""
    return DivisorClass.basis_class(SpaceLabel.F(n), HN) + boundary_divisor(n) * 2


def canonical_class(space: SpaceLabel) -> DivisorClass:
    """Get the canonical class of a space of the tower.

    K = Nλ - ½B(N) on F(N), and (dim)λ - ½ of the Heegner classes on the
    spaces attached to II_{2,2+8k}.

    Raises
    ------
    SpaceMismatchError
        For the stable quotient, whose branch divisor is not tracked
    """
    if space.kind is SpaceKind.F:
        return lambda_class(space) * space.index - branch_divisor(space.index) * HALF
    if space.kind is SpaceKind.FStable:
        raise SpaceMismatchError(f"ERROR: no canonical class tracked on {space}")
    coeffs = {LAMBDA: space.dimension, HN: -HALF}
    if HU in space.basis:
        coeffs[HU] = -HALF
    return DivisorClass(space, coeffs)


def polarization(n: int, beta) -> DivisorClass:
    """Get λ + βΔ(N) on F(N)."""
    beta = _check_beta(beta)
    return lambda_class(SpaceLabel.F(n)) + boundary_divisor(n) * beta


def _check_beta(beta) -> sympy.Rational:
    value = as_rational(beta)
    if value < 0 or value > 1:
        raise ValueError(f"ERROR: β={value} outside [0, 1]")
    return value


def pullback_delta(n: int) -> DivisorClass:
    """Get f_N*Δ(N) on F(N-1), checked against the pullback matrix.

    It is -λ + Δ(N-1), with an extra H_u when N = 4 mod 8 and equal to
    -λ + ½H_h when N = 5 mod 8.

    Raises
    ------
    ConsistencyError
        If the closed form and the matrix disagree
    """
    require_range("N", n, MIN_N + 1)
    inner = SpaceLabel.F(n - 1)
    closed = -lambda_class(inner)
    if n % 8 == 5:
        closed = closed + DivisorClass(inner, {HH: HALF})
    else:
        closed = closed + boundary_divisor(n - 1)
    if n % 8 == 4:
        closed = closed + DivisorClass.basis_class(inner, HU)
    computed = pullback(MapLabel(MapKind.f, n), boundary_divisor(n))
    if computed != closed:
        raise ConsistencyError(
            f"ERROR: f_{n}*Δ({n}) is {computed}, expected {closed}"
        )
    return closed


def split_path(n: int, path: list[MapLabel]) -> tuple[int, tuple[MapKind, ...]]:
    """Split a path into its number of f maps and its unigonal tail.

    Raises
    ------
    SpaceMismatchError
        If the path does not compose or has no closed form restriction
    """
    check_path(n, path)
    depth = 0
    while depth < len(path) and path[depth].kind is MapKind.f:
        depth += 1
    tail = tuple(label.kind for label in path[depth:])
    if tail not in TAILS:
        names = ", ".join(str(label) for label in path)
        raise SpaceMismatchError(f"ERROR: no restriction formula along {names}")
    return depth, tail


def closed_form_restriction(n: int, path: list[MapLabel], beta) -> DivisorClass:
    """Get the restriction of λ + βΔ(N) along a path from the closed forms.

    With k the number of f maps and M = N - k, restricting to F(M) gives
    (1-kβ)λ + βΔ(M), where ½βH_h replaces βΔ(M) when M = 4 mod 8 and k >= 1,
    and an extra βH_u appears when k = 1 and M = 3 mod 8. The unigonal
    tails then give multiples of λ, plus βH_u on the A_1 and A_2 spaces.
    """
    beta = _check_beta(beta)
    depth, tail = split_path(n, path)
    space = check_path(n, path)
    inner = n - depth
    one = sympy.Integer(1)
    if not tail:
        result = lambda_class(space) * (one - depth * beta)
        if depth >= 1 and inner % 8 == 4:
            result = result + DivisorClass(space, {HH: beta * HALF})
        else:
            result = result + boundary_divisor(inner) * beta
        if depth == 1 and inner % 8 == 3:
            result = result + DivisorClass(space, {HU: beta})
        return result
    if tail == (MapKind.l,):
        shift = 4 if depth == 1 else depth + 1
        return lambda_class(space) * (one - shift * beta)
    if tail == (MapKind.m,):
        if depth == 0:
            return DivisorClass(space, {LAMBDA: one - beta, HU: 3 * beta * HALF})
        return DivisorClass(space, {LAMBDA: one - depth * beta, HU: beta})
    if tail == (MapKind.m, MapKind.p):
        shift = 4 if depth == 0 else depth + 2
        return lambda_class(space) * (one - shift * beta)
    if tail == (MapKind.q,):
        return DivisorClass(space, {LAMBDA: one - depth * beta, HU: beta})
    if tail == (MapKind.q, MapKind.r):
        return DivisorClass(space, {LAMBDA: one - (depth + 1) * beta, HU: beta})
    return lambda_class(space) * (one - (depth + 3) * beta)


def restrict_polarization(n: int, path: list[MapLabel], beta) -> DivisorClass:
    """Restrict λ + βΔ(N) along a path, computed two ways.

    Parameters
    ----------
    n: int
        N, the index of the outermost space
    path: list[MapLabel]
        Maps ordered from F(N) inward
    beta: rational
        β in [0, 1]

    Returns
    -------
    restriction: DivisorClass
        The restricted class on the innermost space

    Raises
    ------
    ConsistencyError
        If iterated pullback and the closed form disagree
    """
    iterated = pullback_path(path, polarization(n, beta))
    closed = closed_form_restriction(n, path, beta)
    if iterated != closed:
        names = ", ".join(str(label) for label in path)
        raise ConsistencyError(
            f"ERROR: restriction along {names} is {iterated}, closed form {closed}"
        )
    return iterated


def curve_pairing(curve: str, divisor: DivisorClass) -> sympy.Rational:
    """Pair a fixture curve of F(19) with a class on F(19).

    Raises
    ------
    SpaceMismatchError
        If the class is not on F(19)
    KeyError
        If the curve is not one of Gamma1..Gamma4
    """
    space = SpaceLabel.F(19)
    if divisor.space != space:
        raise SpaceMismatchError(
            f"ERROR: curve fixtures live on {space}, got {divisor.space}"
        )
    row = curve_rows[curve]
    return sum(
        (value * divisor.coeff(key) for value, key in zip(row, space.basis)),
        sympy.Integer(0),
    )


def git_polarization(n: int) -> DivisorClass:
    """Get the pullback of the GIT polarization L(N), N in {18, 19}.

    L(19) pulls back to λ + Δ(19) and L(18) to 2(λ + Δ(18)).
    """
    if n not in (18, 19):
        raise SpaceMismatchError(f"ERROR: no GIT polarization recorded for N={n}")
    base = polarization(n, 1)
    return base if n == 19 else base * 2


def parse_class(expression: str, space: SpaceLabel) -> DivisorClass:
    """Parse "a*lambda + b*Hn + c*Hh + d*Hu" into a class on space.

    Coefficients are integers or p/q literals, a missing coefficient means 1
    and whitespace is ignored. Repeated names add up.

    Raises
    ------
    ClassExpressionError
        If the expression does not follow the grammar
    SpaceMismatchError
        If a name is not a basis class of the space
    """
    text = "".join(expression.split())
    if not text:
        raise ClassExpressionError("ERROR: empty class expression")
    coeffs: dict[str, sympy.Rational] = {}
    position = 0
    while position < len(text):
        match = _TERM.match(text, position)
        if match is None or (position and not match["sign"]):
            raise ClassExpressionError(
                f"ERROR: cannot parse {expression!r} at {text[position:]!r}"
            )
        if match["star"] and not match["coeff"]:
            raise ClassExpressionError(f"ERROR: dangling '*' in {expression!r}")
        key = _NAMES.get(match["name"].lower())
        if key is None:
            raise ClassExpressionError(
                f"ERROR: unknown class {match['name']!r} in {expression!r}"
            )
        value = as_rational(match["coeff"] or 1)
        if match["sign"] == "-":
            value = -value
        coeffs[key] = coeffs.get(key, 0) + value
        position = match.end()
    return DivisorClass(space, coeffs)
