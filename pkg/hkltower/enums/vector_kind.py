"""This module contains the VectorKind class."""
from enum import Enum


class VectorKind(Enum):
    """VectorKind class which contains the enum of all vector classifications.

    Attributes
    ----------
    nodal: VectorKind
        Square -2 and divisibility 1
    hyperelliptic: VectorKind
        Square -4, divisibility 2 and class equal to the decoration
    unigonal: VectorKind
        Minimal norm vector whose class is one of the two remaining elements
    other: VectorKind
        Anything else
    """

    nodal = "nodal"
    hyperelliptic = "hyperelliptic"
    unigonal = "unigonal"
    other = "other"
