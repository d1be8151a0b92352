"""This module contains the Lattice Dictionary class."""
from typing import TypedDict


class LatticeDict(TypedDict):
    """Lattice Dictionary class.

    This class is used to define the dictionary structure of a serialized lattice.
    .. code-block::
        {
            'name': str | None
            'gram': list[list[int]]
        }
    """

    name: str | None
    gram: list[list[int]]
