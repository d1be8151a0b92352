"""This module contains the Provenance class."""
from enum import Enum


class Provenance(Enum):
    """Provenance class which records where a relation comes from.

    Attributes
    ----------
    first: Provenance
        The quasi-pullback through the D_{26-N} embedding
    second: Provenance
        The quasi-pullback through the E_8 + D_{18-N} embedding
    gritsenko: Provenance
        The difference of the first two
    """

    first = "first"
    second = "second"
    gritsenko = "gritsenko"
