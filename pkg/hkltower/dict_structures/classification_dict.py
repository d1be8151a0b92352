"""This module contains the Classification Dictionary class."""
from typing import TypedDict


class ClassificationDict(TypedDict):
    """Classification Dictionary class.

    .. code-block::
        {
            'N': int
            'coords': list[int]
            'square': int
            'divisibility': int
            'disc_class': str
            'kind': str
            'reflective': bool
        }
    """

    N: int
    coords: list[int]
    square: int
    divisibility: int
    disc_class: str
    kind: str
    reflective: bool
