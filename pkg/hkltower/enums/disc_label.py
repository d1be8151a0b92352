"""This module contains the DiscLabel class."""
from enum import Enum


class DiscLabel(Enum):
    """DiscLabel class which names the four elements of A_Λ for a D-lattice.

    Attributes
    ----------
    zero: DiscLabel
        The identity element
    xi: DiscLabel
        The class of (1,0,...,0) in the D factor
    zeta: DiscLabel
        The class of (1/2,...,1/2) in the D factor
    zeta_prime: DiscLabel
        The class of (-1/2,1/2,...,1/2) in the D factor
    """

    zero = "0"
    xi = "xi"
    zeta = "zeta"
    zeta_prime = "zeta_prime"
