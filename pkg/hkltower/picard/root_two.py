"""This module contains the RootTwo class."""
from __future__ import annotations

import sympy

from hkltower.rationals import as_rational, format_rational


class RootTwo:
    """RootTwo class.

    An element a + b√2 of Q(√2) with exact rational a and b.

    Attributes
    ----------
    _a: sympy.Rational
        The rational part
    _b: sympy.Rational
        The coefficient of √2
    """

    def __init__(self, a=0, b=0) -> None:
        """Store the two rational coordinates."""
        self._a = as_rational(a)
        self._b = as_rational(b)

    @property
    def a(self) -> sympy.Rational:
        """Get the rational part."""
        return self._a

    @property
    def b(self) -> sympy.Rational:
        """Get the coefficient of √2."""
        return self._b

    @property
    def is_rational(self) -> bool:
        """Check whether the √2 coefficient vanishes."""
        return self._b == 0

    def to_sympy(self) -> sympy.Expr:
        """Get the value as a sympy expression."""
        return self._a + self._b * sympy.sqrt(2)

    def __add__(self, other: RootTwo) -> RootTwo:
        """Add."""
        return RootTwo(self._a + other._a, self._b + other._b)

    def __sub__(self, other: RootTwo) -> RootTwo:
        """Subtract."""
        return RootTwo(self._a - other._a, self._b - other._b)

    def __mul__(self, other) -> RootTwo:
        """Multiply by another element or a rational."""
        if not isinstance(other, RootTwo):
            other = RootTwo(as_rational(other))
        return RootTwo(
            self._a * other._a + 2 * self._b * other._b,
            self._a * other._b + self._b * other._a,
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        """Compare both coordinates; rationals compare as a + 0√2."""
        if isinstance(other, (int, sympy.Rational)):
            other = RootTwo(other)
        if not isinstance(other, RootTwo):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        """Hash both coordinates."""
        return hash((self._a, self._b))

    def __str__(self) -> str:
        """Render as "a + b√2"."""
        if self.is_rational:
            return format_rational(self._a)
        return f"{format_rational(self._a)} + {format_rational(self._b)}√2"

    def __repr__(self) -> str:
        """Show the rendered value."""
        return f"RootTwo({self})"
