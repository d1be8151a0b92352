"""This module contains the SpaceLabel class."""
from __future__ import annotations

import re

from hkltower.enums.space_kind import SpaceKind
from hkltower.exceptions import SpaceMismatchError
from hkltower.settings import MIN_N

LAMBDA = "lambda"
HN = "Hn"
HH = "Hh"
HU = "Hu"
H0 = "H0"
HXI = "Hxi"
HZETA = "Hzeta"
HZETA_PRIME = "Hzeta_prime"

# display symbol of every basis key
SYMBOLS = {
    LAMBDA: "λ",
    HN: "Hn",
    HH: "Hh",
    HU: "Hu",
    H0: "H0",
    HXI: "Hxi",
    HZETA: "Hzeta",
    HZETA_PRIME: "Hzeta'",
}

_LABEL = re.compile(r"^(?P<kind>FStable|FIIA1|FIIA2|FII|F)\((?P<index>\d+)\)$")


class SpaceLabel:
    """SpaceLabel class.

    Names one of the spaces of the tower. The index is N for F(N) and
    FStable(N) and k for the spaces attached to II_{2,2+8k}.

    Attributes
    ----------
    _kind: SpaceKind
        The family of the space
    _index: int
        N or k

    Methods
    -------
    basis(self) -> tuple[str, ...]
        The keys of the divisor classes spanning the rational Picard group
    dimension(self) -> int
        The dimension of the space
    parse(cls, text) -> SpaceLabel
        Rebuild a label from its name
    """

    def __init__(self, kind: SpaceKind, index: int) -> None:
        """Validate the index of a space label.

        Raises
        ------
        SpaceMismatchError
            If N < 3 for F and FStable, or k < 0 otherwise
        """
        if not isinstance(kind, SpaceKind):
            raise TypeError(f"ERROR: {kind!r} is not a SpaceKind")
        index = int(index)
        low = MIN_N if kind in (SpaceKind.F, SpaceKind.FStable) else 0
        if index < low:
            raise SpaceMismatchError(f"ERROR: no space {kind.value}({index})")
        self._kind = kind
        self._index = index

    @classmethod
    def F(cls, n: int) -> SpaceLabel:  # noqa: N802
        """Get F(N)."""
        return cls(SpaceKind.F, n)

    @classmethod
    def FII(cls, k: int) -> SpaceLabel:  # noqa: N802
        """Get F(II_{2,2+8k})."""
        return cls(SpaceKind.FII, k)

    @classmethod
    def FIIA1(cls, k: int) -> SpaceLabel:  # noqa: N802
        """Get F(II_{2,2+8k} + A_1)."""
        return cls(SpaceKind.FIIA1, k)

    @classmethod
    def FIIA2(cls, k: int) -> SpaceLabel:  # noqa: N802
        """Get F(II_{2,2+8k} + A_2)."""
        return cls(SpaceKind.FIIA2, k)

    @classmethod
    def FStable(cls, n: int) -> SpaceLabel:  # noqa: N802
        """Get the quotient of the D-lattice of dimension N by the stable group."""
        return cls(SpaceKind.FStable, n)

    @classmethod
    def parse(cls, text: str) -> SpaceLabel:
        """Rebuild a label such as "F(19)" or "FIIA1(1)"."""
        match = _LABEL.match(text.replace(" ", ""))
        if match is None:
            raise SpaceMismatchError(f"ERROR: unknown space {text!r}")
        return cls(SpaceKind(match["kind"]), int(match["index"]))

    @property
    def kind(self) -> SpaceKind:
        """Get the family of the space."""
        return self._kind

    @property
    def index(self) -> int:
        """Get N or k."""
        return self._index

    @property
    def has_unigonal(self) -> bool:
        """Check whether F(N) carries a unigonal divisor (N not 2 mod 8)."""
        return self._kind is not SpaceKind.F or self._index % 8 != 2

    @property
    def basis(self) -> tuple[str, ...]:
        """Get the keys of the spanning classes."""
        if self._kind is SpaceKind.F:
            return (LAMBDA, HN, HH, HU) if self.has_unigonal else (LAMBDA, HN, HH)
        if self._kind is SpaceKind.FII:
            return (LAMBDA, HN)
        if self._kind is SpaceKind.FStable:
            return (LAMBDA, H0, HXI, HZETA, HZETA_PRIME)
        return (LAMBDA, HN, HU)

    @property
    def dimension(self) -> int:
        """Get the dimension: N, 8k+2, 8k+3 or 8k+4."""
        if self._kind in (SpaceKind.F, SpaceKind.FStable):
            return self._index
        offset = {SpaceKind.FII: 2, SpaceKind.FIIA1: 3, SpaceKind.FIIA2: 4}
        return 8 * self._index + offset[self._kind]

    @property
    def name(self) -> str:
        """Get the printed name such as "F(18)"."""
        return f"{self._kind.value}({self._index})"

    def __eq__(self, other) -> bool:
        """Compare kind and index."""
        if not isinstance(other, SpaceLabel):
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
        return f"SpaceLabel({self.name})"
