"""This module contains the boundary divisor Δ(N) and its strata Δ^(k)(N)."""
import sympy

from hkltower.divisors.divisor_class import DivisorClass
from hkltower.divisors.space_label import HH, HU, SpaceLabel
from hkltower.dtower.invariants import tau
from hkltower.enums.stratum_kind import StratumKind
from hkltower.exceptions import require_range
from hkltower.settings import MIN_N

HALF = sympy.Rational(1, 2)


def boundary_divisor(n: int) -> DivisorClass:
    """Get Δ(N) on F(N).

    Δ(N) = ½H_h when τ(N) = 2 and ½(H_h + H_u) when τ(N) = 1.
    """
    space = SpaceLabel.F(n)
    if tau(n) == 1:
        return DivisorClass(space, {HH: HALF, HU: HALF})
    return DivisorClass(space, {HH: HALF})


def boundary_strata(n: int, k: int) -> tuple[tuple[StratumKind, int], ...]:
    """Get the irreducible components of Δ^(k)(N) as (kind, M) labels.

    Δ^(1)(N) is the support of Δ(N): Im f_{N-1,N} together with the unigonal
    divisor Im l_N or Im m_N when N is 3 or 4 mod 8. For k >= 2 it is
    Im f_{N-k,N} together with Im(f_{N-k+1,N} o l_{N-k+1}) when k = N-2 mod 8.

    Parameters
    ----------
    n: int
        N, at least 4
    k: int
        The codimension, 1 <= k <= N-3

    Returns
    -------
    strata: tuple[tuple[StratumKind, int], ...]
        Labels (kind, M) with M the inner index of the composition path
    """
    require_range("N", n, MIN_N + 1)
    require_range("k", k, 1, n - MIN_N)
    strata = [(StratumKind.f_path, n - k)]
    if k == 1 and n % 8 == 4:
        strata.append((StratumKind.f_then_m, n))
    elif (n - k + 1) % 8 == 3:
        strata.append((StratumKind.f_then_l, n - k + 1))
    return tuple(strata)
