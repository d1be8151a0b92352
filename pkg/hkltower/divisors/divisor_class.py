"""This module contains the DivisorClass class."""
from __future__ import annotations

import sympy

from hkltower.dict_structures.class_dict import ClassDict
from hkltower.divisors.space_label import LAMBDA, SYMBOLS, SpaceLabel
from hkltower.exceptions import SpaceMismatchError
from hkltower.rationals import as_rational, format_rational


class DivisorClass:
    """DivisorClass class.

    An exact rational combination of the basis classes of a space. Missing
    keys have coefficient zero.

    Attributes
    ----------
    _space: SpaceLabel
        The space carrying the class
    _coeffs: dict[str, sympy.Rational]
        Nonzero coefficients keyed by basis key

    Methods
    -------
    coeff(self, key) -> sympy.Rational
        The coefficient of a basis class
    substitute(self, key, value) -> DivisorClass
        Replace a basis class by another class of the same space
    to_dict(self) -> ClassDict
        Serialize as {space, coeffs}
    """

    def __init__(self, space: SpaceLabel, coeffs=None) -> None:
        """Store the nonzero coefficients.

        Raises
        ------
        SpaceMismatchError
            If a key is not in the basis of the space
        """
        if not isinstance(space, SpaceLabel):
            raise TypeError(f"ERROR: {space!r} is not a SpaceLabel")
        self._space = space
        self._coeffs: dict[str, sympy.Rational] = {}
        for key, value in (coeffs or {}).items():
            if key not in space.basis:
                raise SpaceMismatchError(f"ERROR: {key} is not a class on {space}")
            rational = as_rational(value)
            if rational != 0:
                self._coeffs[key] = rational

    @classmethod
    def zero(cls, space: SpaceLabel) -> DivisorClass:
        """Get the zero class."""
        return cls(space)

    @classmethod
    def basis_class(cls, space: SpaceLabel, key: str) -> DivisorClass:
        """Get a single basis class with coefficient one."""
        return cls(space, {key: 1})

    @property
    def space(self) -> SpaceLabel:
        """Get the space."""
        return self._space

    @property
    def coeffs(self) -> dict[str, sympy.Rational]:
        """Get a copy of the nonzero coefficients."""
        return dict(self._coeffs)

    @property
    def is_zero(self) -> bool:
        """Check whether every coefficient vanishes."""
        return not self._coeffs

    def coeff(self, key: str) -> sympy.Rational:
        """Get the coefficient of a basis class.

        Raises
        ------
        SpaceMismatchError
            If the key is not in the basis of the space
        """
        if key not in self._space.basis:
            raise SpaceMismatchError(f"ERROR: {key} is not a class on {self._space}")
        return self._coeffs.get(key, sympy.Integer(0))

    def _check_space(self, other: DivisorClass) -> None:
        if self._space != other._space:
            raise SpaceMismatchError(
                f"ERROR: cannot combine classes on {self._space} and {other._space}"
            )

    def __add__(self, other: DivisorClass) -> DivisorClass:
        """Add two classes of the same space."""
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._check_space(other)
        total = dict(self._coeffs)
        for key, value in other._coeffs.items():
            total[key] = total.get(key, 0) + value
        return DivisorClass(self._space, total)

    def __neg__(self) -> DivisorClass:
        """Negate the class."""
        return DivisorClass(self._space, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        """Subtract two classes of the same space."""
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> DivisorClass:
        """Multiply by an exact rational."""
        if isinstance(scalar, DivisorClass):
            return NotImplemented
        factor = as_rational(scalar)
        return DivisorClass(
            self._space, {k: factor * v for k, v in self._coeffs.items()}
        )

    __rmul__ = __mul__

    def substitute(self, key: str, value: DivisorClass) -> DivisorClass:
        """Replace the basis class key by value, another class of the space."""
        self._check_space(value)
        coefficient = self.coeff(key)
        rest = {k: v for k, v in self._coeffs.items() if k != key}
        return DivisorClass(self._space, rest) + value * coefficient

    def without(self, *keys: str) -> DivisorClass:
        """Get the class with the given coefficients dropped."""
        return DivisorClass(
            self._space, {k: v for k, v in self._coeffs.items() if k not in keys}
        )

    def to_dict(self) -> ClassDict:
        """Serialize as {space, coeffs} with "p/q" coefficients."""
        return {
            "space": self._space.name,
            "coeffs": {
                key: format_rational(self.coeff(key)) for key in self._space.basis
            },
        }

    @classmethod
    def from_dict(cls, payload: ClassDict) -> DivisorClass:
        """Rebuild a class from {space, coeffs}."""
        return cls(SpaceLabel.parse(payload["space"]), payload["coeffs"])

    def terms(self) -> str:
        """Render the nonzero terms in basis order, e.g. "-2 λ + 1 Hh"."""
        parts = []
        for key in self._space.basis:
            value = self._coeffs.get(key)
            if value is None:
                continue
            if not parts:
                parts.append(f"{format_rational(value)} {SYMBOLS[key]}")
            elif value < 0:
                parts.append(f"- {format_rational(-value)} {SYMBOLS[key]}")
            else:
                parts.append(f"+ {format_rational(value)} {SYMBOLS[key]}")
        return " ".join(parts) if parts else "0"

    def __eq__(self, other) -> bool:
        """Compare space and coefficients."""
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self._space == other._space and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        """Hash space and coefficients."""
        return hash((self._space, tuple(sorted(self._coeffs.items()))))

    def __str__(self) -> str:
        """Render as "-2 λ + 1 Hh on F(18)"."""
        return f"{self.terms()} on {self._space}"

    def __repr__(self) -> str:
        """Show the rendered class."""
        return f"DivisorClass({self})"


def lambda_class(space: SpaceLabel) -> DivisorClass:
    """Get the Hodge class λ of a space."""
    return DivisorClass.basis_class(space, LAMBDA)
