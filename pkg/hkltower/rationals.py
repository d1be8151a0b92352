"""This module contains helpers for exact rational values.

Every user facing rational is a ``sympy.Rational`` and is rendered as ``p/q``
(``p`` for integers), never as a decimal.
"""
import sympy
from sympy import QQ

from hkltower.exceptions import ClassExpressionError


def as_rational(value) -> sympy.Rational:
    """Convert an int, a string ``p/q`` or an exact rational to sympy.Rational.

    Parameters
    ----------
    value: int | str | sympy.Rational
        The value to convert; domain elements with numerator and denominator
        are accepted too

    Returns
    -------
    rational: sympy.Rational
        The exact value

    Raises
    ------
    ClassExpressionError
        If a string is not an integer or a ``p/q`` literal
    """
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, bool):
        raise ClassExpressionError(f"ERROR: not a rational literal: {value!r}")
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, str):
        text = value.strip().replace(" ", "")
        numerator, _, denominator = text.partition("/")
        try:
            if denominator:
                if int(denominator) == 0:
                    raise ClassExpressionError(
                        f"ERROR: zero denominator in {value!r}"
                    )
                return sympy.Rational(int(numerator), int(denominator))
            return sympy.Integer(int(numerator))
        except ValueError as error:
            raise ClassExpressionError(
                f"ERROR: not a rational literal: {value!r}"
            ) from error
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return sympy.Rational(int(value.numerator), int(value.denominator))
    raise ClassExpressionError(f"ERROR: not a rational literal: {value!r}")


def format_rational(value) -> str:
    """Render an exact rational as ``p/q``, or ``p`` when it is an integer."""
    rational = as_rational(value)
    if rational.q == 1:
        return str(rational.p)
    return f"{rational.p}/{rational.q}"


def floor_of(value) -> int:
    """Get the floor of an exact rational with numerator and denominator."""
    return int(value.numerator) // int(value.denominator)


def to_qq(value):
    """Convert an int or an exact rational to an element of the domain QQ."""
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, sympy.Rational):
        return QQ(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        rational = as_rational(value)
        return QQ(int(rational.p), int(rational.q))
    raise TypeError(f"ERROR: cannot use {value!r} as an exact rational")
