"""This module contains the Cyclotomic8 class."""
from __future__ import annotations

import sympy

from hkltower.picard.root_two import RootTwo
from hkltower.rationals import as_rational, format_rational

HALF = sympy.Rational(1, 2)


class Cyclotomic8:
    """Cyclotomic8 class.

    An element of Q(ζ₈), ζ₈ = exp(πi/4), stored by its exact rational
    coordinates on 1, ζ₈, ζ₈², ζ₈³. Since ζ₈⁴ = -1 this basis is closed under
    multiplication.

    Attributes
    ----------
    _coeffs: tuple[sympy.Rational, ...]
        The four coordinates

    Methods
    -------
    zeta_power(cls, k) -> Cyclotomic8
        ζ₈^k for any integer k
    exp_pi_i(cls, r) -> Cyclotomic8
        exp(πir) for r a multiple of 1/4
    real_part(self) -> RootTwo
        The real part in Q(√2)
    """

    def __init__(self, coeffs=(0, 0, 0, 0)) -> None:
        """Store four exact coordinates."""
        values = tuple(as_rational(value) for value in coeffs)
        if len(values) != 4:
            raise ValueError("ERROR: Cyclotomic8 needs four coordinates")
        self._coeffs = values

    @classmethod
    def zeta_power(cls, k: int) -> Cyclotomic8:
        """Get ζ₈^k."""
        k = int(k) % 8
        coeffs = [0, 0, 0, 0]
        coeffs[k % 4] = 1 if k < 4 else -1
        return cls(coeffs)

    @classmethod
    def exp_pi_i(cls, r) -> Cyclotomic8:
        """Get exp(πir) = ζ₈^(4r).

        Raises
        ------
        ValueError
            If 4r is not an integer
        """
        exponent = 4 * as_rational(r)
        if exponent.q != 1:
            raise ValueError(f"ERROR: exp(πi·{r}) is not an 8th root of unity")
        return cls.zeta_power(int(exponent))

    @property
    def coeffs(self) -> tuple[sympy.Rational, ...]:
        """Get the four coordinates."""
        return self._coeffs

    def conjugate(self) -> Cyclotomic8:
        """Get the complex conjugate: ζ₈^j goes to ζ₈^(-j)."""
        a, b, c, d = self._coeffs
        return Cyclotomic8((a, -d, -c, -b))

    def real_part(self) -> RootTwo:
        """Get the real part a + (b - d)/2 √2."""
        a, b, _, d = self._coeffs
        return RootTwo(a, (b - d) * HALF)

    def imaginary_part(self) -> RootTwo:
        """Get the imaginary part c + (b + d)/2 √2."""
        _, b, c, d = self._coeffs
        return RootTwo(c, (b + d) * HALF)

    def to_sympy(self) -> sympy.Expr:
        """Get the value as a sympy expression."""
        return self.real_part().to_sympy() + sympy.I * self.imaginary_part().to_sympy()

    def __add__(self, other: Cyclotomic8) -> Cyclotomic8:
        """Add."""
        return Cyclotomic8(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> Cyclotomic8:
        """Negate."""
        return Cyclotomic8(-a for a in self._coeffs)

    def __sub__(self, other: Cyclotomic8) -> Cyclotomic8:
        """Subtract."""
        return self + (-other)

    def __mul__(self, other) -> Cyclotomic8:
        """Multiply by another element or a rational."""
        if not isinstance(other, Cyclotomic8):
            factor = as_rational(other)
            return Cyclotomic8(factor * a for a in self._coeffs)
        product = [sympy.Integer(0)] * 4
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if not b:
                    continue
                if i + j < 4:
                    product[i + j] += a * b
                else:
                    product[i + j - 4] -= a * b
        return Cyclotomic8(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Cyclotomic8:
        """Raise to a nonnegative integer power."""
        if exponent < 0:
            raise ValueError("ERROR: negative powers are not supported")
        result = Cyclotomic8((1, 0, 0, 0))
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        """Compare coordinates."""
        if not isinstance(other, Cyclotomic8):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        """Hash the coordinates."""
        return hash(self._coeffs)

    def __repr__(self) -> str:
        """Show the coordinates."""
        text = ", ".join(format_rational(value) for value in self._coeffs)
        return f"Cyclotomic8({text})"
