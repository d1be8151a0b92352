"""This module contains the Class Dictionary class."""
from typing import TypedDict


class ClassDict(TypedDict):
    """Class Dictionary class.

    A divisor class on a named space, coefficients rendered as "p/q".
    .. code-block::
        {
            'space': str
            'coeffs': dict[str, str]
        }
    """

    space: str
    coeffs: dict[str, str]
