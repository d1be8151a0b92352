"""This module contains the Stratum class."""
from __future__ import annotations

from hkltower.dict_structures.stratum_dict import StratumDict
from hkltower.divisors.maps import MapLabel, tower_path
from hkltower.enums.map_kind import MapKind
from hkltower.enums.stratum_kind import StratumKind
from hkltower.exceptions import RangeError, require_range
from hkltower.settings import TOWER_MIN_M, TOWER_MIN_N

# residue of M mod 8 and the unigonal map of each composed kind
_TAILS = {
    StratumKind.f_then_l: (3, MapKind.l),
    StratumKind.f_then_m: (4, MapKind.m),
    StratumKind.f_then_q: (5, MapKind.q),
}

# smallest M of each kind
_LOWEST_M = {
    StratumKind.f_path: TOWER_MIN_M,
    StratumKind.f_then_l: TOWER_MIN_M,
    StratumKind.f_then_m: TOWER_MIN_M + 1,
    StratumKind.f_then_q: TOWER_MIN_M + 2,
}


class Stratum:
    """Stratum class.

    An element of Tower(N): Im f_{M,N}, or Im(f_{M,N}∘l_M), Im(f_{M,N}∘m_M),
    Im(f_{M,N}∘q_M) for M = 3, 4, 5 mod 8.

    Attributes
    ----------
    _kind: StratumKind
        The shape of the composition path
    _m: int
        The inner index M
    _n: int
        N

    Methods
    -------
    t_value(self) -> int | None
        The integer whose reciprocal is the critical β, None when it is 0
    path(self) -> list[MapLabel]
        The composition path from F(N) inward
    description(self) -> str
        e.g. "Im(f_{11,19}∘l_{11})"
    """

    def __init__(self, kind: StratumKind, m: int, n: int) -> None:
        """Check that the stratum belongs to Tower(N).

        Raises
        ------
        RangeError
            If N < 15, M is out of range or has the wrong residue
        """
        kind = StratumKind(kind)
        require_range("N", n, TOWER_MIN_N)
        require_range("M", m, _LOWEST_M[kind], n)
        if kind in _TAILS and m % 8 != _TAILS[kind][0]:
            raise RangeError(
                f"ERROR: {kind.value} needs M = {_TAILS[kind][0]} mod 8, got M={m}"
            )
        self._kind = kind
        self._m = m
        self._n = n

    @property
    def kind(self) -> StratumKind:
        """Get the kind."""
        return self._kind

    @property
    def m(self) -> int:
        """Get M."""
        return self._m

    @property
    def n(self) -> int:
        """Get N."""
        return self._n

    @property
    def dim(self) -> int:
        """Get the dimension: M for Im f_{M,N}, M - 1 for the unigonal kinds."""
        return self._m if self._kind is StratumKind.f_path else self._m - 1

    @property
    def label(self) -> tuple[StratumKind, int]:
        """Get (kind, M)."""
        return self._kind, self._m

    def t_value(self) -> int | None:
        """Get t_N(X).

        N - M for Im f_{M,N} with M >= 14, for Im(f∘m_M) with M < N and for
        Im(f∘q_M); N - 14 for Im f_{M,N} with M <= 13; N - M + 1 for
        Im(f∘l_M) with M != N - 1; 1 for Im m_N and 4 for Im(f_{N-1,N}∘l_{N-1})
        when N = 4 mod 8.
        """
        n, m = self._n, self._m
        if self._kind is StratumKind.f_path:
            value = n - m if m >= 14 else n - 14
        elif self._kind is StratumKind.f_then_l:
            value = 4 if m == n - 1 else n - m + 1
        elif self._kind is StratumKind.f_then_m:
            value = 1 if m == n else n - m
        else:
            value = n - m
        return value or None

    @property
    def is_gritsenko_case(self) -> bool:
        """Check for Im f_{M,N} with M <= 13, whose t comes from H_h = ... λ."""
        return self._kind is StratumKind.f_path and self._m <= 13

    def path(self) -> list[MapLabel]:
        """Get the composition path from F(N) inward."""
        tail = (_TAILS[self._kind][1],) if self._kind in _TAILS else ()
        return tower_path(self._n, self._n - self._m, tail)

    def description(self) -> str:
        """Describe the stratum, e.g. "Im(f_{11,19}∘l_{11})"."""
        n, m = self._n, self._m
        if self._kind is StratumKind.f_path:
            return f"F({n})" if m == n else f"Im f_{{{m},{n}}}"
        name = _TAILS[self._kind][1].value
        if m == n:
            return f"Im {name}_{{{m}}}"
        return f"Im(f_{{{m},{n}}}∘{name}_{{{m}}})"

    def to_dict(self) -> StratumDict:
        """Serialize the stratum."""
        return {
            "kind": self._kind.value,
            "M": self._m,
            "N": self._n,
            "dim": self.dim,
            "t_value": self.t_value(),
            "description": self.description(),
        }

    def __eq__(self, other) -> bool:
        """Compare kind, M and N."""
        if not isinstance(other, Stratum):
            return NotImplemented
        return (self._kind, self._m, self._n) == (other._kind, other._m, other._n)

    def __hash__(self) -> int:
        """Hash kind, M and N."""
        return hash((self._kind, self._m, self._n))

    def __str__(self) -> str:
        """Show the description."""
        return self.description()

    def __repr__(self) -> str:
        """Show the fields."""
        return f"Stratum({self._kind.value}, M={self._m}, N={self._n})"
