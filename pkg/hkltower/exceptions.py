"""This module contains the exception hierarchy of hkltower.

Every message starts with ``"ERROR: "`` so that the command line can print it
as is.
"""


class LatticeError(ValueError):
    """Raised for malformed lattices and invalid lattice constructions."""


class DegenerateLatticeError(LatticeError):
    """Raised when a Gram matrix has zero determinant."""


class NotPrimitiveError(LatticeError):
    """Raised when an operation needs a primitive vector."""


class IndefiniteLatticeError(LatticeError):
    """Raised when vector enumeration is asked of an indefinite lattice."""


class ZeroVectorError(LatticeError):
    """Raised when an operation needs a nonzero vector."""


class RangeError(ValueError):
    """Raised when N or another parameter is outside its documented range."""


class SpaceMismatchError(ValueError):
    """Raised when a divisor class or a map does not fit the requested space."""


class ClassExpressionError(ValueError):
    """Raised when a divisor class expression cannot be parsed."""


class ConsistencyError(RuntimeError):
    """Raised when an independent recomputation disagrees with a closed form."""


def require_range(name: str, value: int, low: int, high: int | None = None) -> None:
    """Check that an integer parameter lies in a closed range.

    Parameters
    ----------
    name: str
        The parameter name used in the message
    value: int
        The value to check
    low: int
        Smallest admissible value
    high: int | None
        Largest admissible value, unbounded when None

    Raises
    ------
    RangeError
        If value is outside [low, high]
    """
    if value < low or (high is not None and value > high):
        upper = "" if high is None else f"..{high}"
        raise RangeError(f"ERROR: {name}={value} outside the range {low}{upper}")
