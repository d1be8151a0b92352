"""This module contains the GroupKind class."""
from enum import Enum


class GroupKind(Enum):
    """GroupKind class which selects the arithmetic group of a relation.

    Attributes
    ----------
    decorated: GroupKind
        The stabilizer of the decoration, giving F(N)
    stable: GroupKind
        The stable orthogonal group, giving the double cover for N even
    """

    decorated = "decorated"
    stable = "stable"
