"""This module contains the SpaceKind class."""
from enum import Enum


class SpaceKind(Enum):
    """SpaceKind class which contains the enum of all locally symmetric spaces.

    Attributes
    ----------
    F: SpaceKind
        F(N), the quotient attached to the decorated D-lattice of dimension N
    FII: SpaceKind
        F(II_{2,2+8k})
    FIIA1: SpaceKind
        F(II_{2,2+8k} + A_1)
    FIIA2: SpaceKind
        F(II_{2,2+8k} + A_2)
    FStable: SpaceKind
        The quotient by the stable group, a double cover of F(N) for N even
    """

    F = "F"
    FII = "FII"
    FIIA1 = "FIIA1"
    FIIA2 = "FIIA2"
    FStable = "FStable"
