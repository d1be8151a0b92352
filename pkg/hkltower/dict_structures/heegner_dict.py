"""This module contains the Heegner Dictionary class."""
from typing import TypedDict


class HeegnerDict(TypedDict):
    """Heegner Dictionary class.

    Computed and expected coefficients of one embedding.
    .. code-block::
        {
            'N': int
            'variant': str
            'weight': int
            'computed': dict[str, int]
            'expected': dict[str, int]
            'matches': bool
        }
    """

    N: int
    variant: str
    weight: int
    computed: dict[str, int]
    expected: dict[str, int]
    matches: bool
