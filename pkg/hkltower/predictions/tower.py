"""This module contains Tower(N), Center(N) and containment of strata."""
import logging

from hkltower.enums.stratum_kind import StratumKind
from hkltower.exceptions import ConsistencyError, require_range
from hkltower.predictions.stratum import Stratum
from hkltower.settings import TOWER_MIN_M, TOWER_MIN_N

logger = logging.getLogger(__name__)

# residue of M mod 8 for each unigonal kind
_RESIDUES = {
    StratumKind.f_then_l: 3,
    StratumKind.f_then_m: 4,
    StratumKind.f_then_q: 5,
}


def _sort_key(stratum: Stratum) -> tuple:
    t = stratum.t_value() or 0
    return -t, stratum.dim, stratum.kind.value, stratum.m


def tower(n: int) -> list[Stratum]:
    """Enumerate Tower(N), ordered by t descending then dimension ascending.

    Raises
    ------
    RangeError
        If N < 15
    """
    require_range("N", n, TOWER_MIN_N)
    strata = [Stratum(StratumKind.f_path, m, n) for m in range(TOWER_MIN_M, n + 1)]
    for kind, residue in _RESIDUES.items():
        strata.extend(
            Stratum(kind, m, n)
            for m in range(TOWER_MIN_M, n + 1)
            if m % 8 == residue
        )
    return sorted(strata, key=_sort_key)


def t_value(n: int, stratum: Stratum) -> int | None:
    """Get t_N of a stratum of Tower(N).

    Raises
    ------
    RangeError
        If the stratum belongs to another N
    """
    if stratum.n != n:
        require_range("stratum N", stratum.n, n, n)
    return stratum.t_value()


def contains(outer: Stratum, inner: Stratum) -> bool:
    """Check inner ⊂ outer from the composition paths.

    Im f_{M,N} ⊂ Im f_{M',N} iff M <= M'. Im(f∘l_M) lies in Im f_{M'} for
    M' >= M, in Im(f∘m_{M+1}) and in Im(f∘q_{M+2}). Im(f∘m_M) lies in
    Im f_{M'} for M' >= M and in Im(f∘q_{M+1}). Im(f∘q_M) lies in Im f_{M'}
    for M' >= M.
    """
    if outer.n != inner.n:
        return False
    if outer == inner:
        return True
    if outer.kind is StratumKind.f_path:
        return inner.m <= outer.m
    if inner.kind is StratumKind.f_then_l:
        step = {StratumKind.f_then_m: 1, StratumKind.f_then_q: 2}.get(outer.kind)
        return step is not None and outer.m == inner.m + step
    if inner.kind is StratumKind.f_then_m:
        return outer.kind is StratumKind.f_then_q and outer.m == inner.m + 1
    return False


def centers(n: int) -> list[Stratum]:
    """Get Center(N), the strata with t above that of every proper superset.

    t must be positive. Im(f_{20,N}∘m_{20}) for N >= 21 and Im(f_{21,N}∘q_{21})
    for N >= 22 share t with Im f_{20,N} and Im f_{21,N} and are left out.

    Raises
    ------
    ConsistencyError
        If some Im f_{M,N} with M <= 13 passes the check
    """
    strata = tower(n)
    selected = []
    for stratum in strata:
        t = stratum.t_value()
        if t is None:
            continue
        dominates = all(
            t > (other.t_value() or 0)
            for other in strata
            if other != stratum and contains(other, stratum)
        )
        if dominates and stratum.is_gritsenko_case:
            raise ConsistencyError(
                f"ERROR: {stratum} at N={n} exceeds the t of its supersets"
            )
        if dominates:
            selected.append(stratum)
    logger.debug("Center(%d) = %s", n, [str(stratum) for stratum in selected])
    return selected


def center_t_values(n: int) -> frozenset[int]:
    """Get the set of t values of Center(N)."""
    return frozenset(stratum.t_value() for stratum in centers(n))


def shift_by_one(n: int) -> bool:
    """Check that the center t values at N are those at N-1 plus one, and 1."""
    require_range("N", n, TOWER_MIN_N + 1)
    shifted = {t + 1 for t in center_t_values(n - 1)} | {1}
    return center_t_values(n) == shifted
