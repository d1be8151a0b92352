"""This module contains the MapKind class."""
from enum import Enum


class MapKind(Enum):
    """MapKind class which contains the enum of the tower maps.

    Attributes
    ----------
    f: MapKind
        F(N-1) onto the hyperelliptic divisor of F(N)
    l: MapKind
        F(II_{2,2+8k}) onto the unigonal divisor of F(8k+3)
    m: MapKind
        F(II_{2,2+8k} + A_1) onto the unigonal divisor of F(8k+4)
    q: MapKind
        F(II_{2,2+8k} + A_2) onto the unigonal divisor of F(8k+5)
    p: MapKind
        F(II_{2,2+8k}) into F(II_{2,2+8k} + A_1)
    r: MapKind
        F(II_{2,2+8k} + A_1) into F(II_{2,2+8k} + A_2)
    rho: MapKind
        The stable double cover of F(N), N even
    """

    f = "f"
    l = "l"  # noqa: E741
    m = "m"
    q = "q"
    p = "p"
    r = "r"
    rho = "rho"
