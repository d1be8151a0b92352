"""This module contains the MapLabel class."""
from __future__ import annotations

import re

from hkltower.divisors.space_label import SpaceLabel
from hkltower.enums.map_kind import MapKind
from hkltower.exceptions import SpaceMismatchError
from hkltower.settings import MIN_N

# residue of the codomain N mod 8 required by the unigonal maps
_RESIDUES = {MapKind.l: 3, MapKind.m: 4, MapKind.q: 5}

_NAME = re.compile(r"^(?P<kind>rho|[flmqpr])_?(?P<index>\d+)$")


class MapLabel:
    """MapLabel class.

    One arrow of the tower. The index is the codomain N for f, l, m, q and
    rho, and the k of II_{2,2+8k} for p and r.

    Attributes
    ----------
    _kind: MapKind
        The family of the map
    _index: int
        N or k

    Methods
    -------
    domain(self) -> SpaceLabel
        The source space; pullbacks land here
    codomain(self) -> SpaceLabel
        The target space; pullbacks start here
    """

    def __init__(self, kind: MapKind, index: int) -> None:
        """Check that the map exists for the index.

        Raises
        ------
        SpaceMismatchError
            If the residue of N does not allow the map
        """
        if not isinstance(kind, MapKind):
            raise TypeError(f"ERROR: {kind!r} is not a MapKind")
        index = int(index)
        if kind in (MapKind.p, MapKind.r):
            if index < 0:
                raise SpaceMismatchError(f"ERROR: no map {kind.value}_{index}")
        elif kind is MapKind.f:
            if index < MIN_N + 1:
                raise SpaceMismatchError(f"ERROR: no map f_{index}, need N >= 4")
        elif kind is MapKind.rho:
            if index < MIN_N or index % 2:
                raise SpaceMismatchError(
                    f"ERROR: the stable double cover needs N even, got {index}"
                )
        elif index < MIN_N or index % 8 != _RESIDUES[kind]:
            raise SpaceMismatchError(
                f"ERROR: {kind.value}_{index} needs N = {_RESIDUES[kind]} mod 8"
            )
        self._kind = kind
        self._index = index

    @classmethod
    def parse(cls, text: str) -> MapLabel:
        """Rebuild a label from a name such as "f_19" or "rho18"."""
        match = _NAME.match(text.strip())
        if match is None:
            raise SpaceMismatchError(f"ERROR: unknown map {text!r}")
        return cls(MapKind(match["kind"]), int(match["index"]))

    @property
    def kind(self) -> MapKind:
        """Get the family of the map."""
        return self._kind

    @property
    def index(self) -> int:
        """Get N or k."""
        return self._index

    @property
    def domain(self) -> SpaceLabel:
        """Get the source space."""
        n = self._index
        if self._kind is MapKind.f:
            return SpaceLabel.F(n - 1)
        if self._kind is MapKind.l:
            return SpaceLabel.FII((n - 3) // 8)
        if self._kind is MapKind.m:
            return SpaceLabel.FIIA1((n - 4) // 8)
        if self._kind is MapKind.q:
            return SpaceLabel.FIIA2((n - 5) // 8)
        if self._kind is MapKind.p:
            return SpaceLabel.FII(n)
        if self._kind is MapKind.r:
            return SpaceLabel.FIIA1(n)
        return SpaceLabel.FStable(n)

    @property
    def codomain(self) -> SpaceLabel:
        """Get the target space."""
        if self._kind is MapKind.p:
            return SpaceLabel.FIIA1(self._index)
        if self._kind is MapKind.r:
            return SpaceLabel.FIIA2(self._index)
        return SpaceLabel.F(self._index)

    @property
    def name(self) -> str:
        """Get the printed name such as "f_19"."""
        return f"{self._kind.value}_{self._index}"

    def __eq__(self, other) -> bool:
        """Compare kind and index."""
        if not isinstance(other, MapLabel):
            return NotImplemented
        return self._kind is other._kind and self._index == other._index

    def __hash__(self) -> int:
        """Hash kind and index."""
        return hash((self._kind, self._index))

    def __str__(self) -> str:
        """Show the printed name."""
        return self.name

    def __repr__(self) -> str:
        """Show the printed name."""
        return f"MapLabel({self.name})"


def tower_path(n: int, depth: int, tail: tuple[MapKind, ...] = ()) -> list[MapLabel]:
    """Build the path f_N, ..., f_{N-depth+1} followed by a unigonal tail.

    Parameters
    ----------
    n: int
        The index of the outermost space F(N)
    depth: int
        The number of f maps
    tail: tuple[MapKind, ...]
        One of (), (l,), (m,), (m, p), (q,), (q, r), (q, r, p)

    Returns
    -------
    path: list[MapLabel]
        Maps ordered from F(N) inward

    Raises
    ------
    SpaceMismatchError
        If the tail does not start from the residue of N - depth
    """
    path = [MapLabel(MapKind.f, n - i) for i in range(depth)]
    if not tail:
        return path
    inner = n - depth
    path.append(MapLabel(tail[0], inner))
    k = path[-1].domain.index
    path.extend(MapLabel(kind, k) for kind in tail[1:])
    check_path(n, path)
    return path


def check_path(n: int, path: list[MapLabel]) -> SpaceLabel:
    """Check that the maps compose from F(N) inward; return the final space.

    Raises
    ------
    SpaceMismatchError
        If a map's codomain is not the previous map's domain
    """
    current = SpaceLabel.F(n)
    for label in path:
        if label.codomain != current:
            raise SpaceMismatchError(
                f"ERROR: {label} maps into {label.codomain}, not {current}"
            )
        current = label.domain
    return current
