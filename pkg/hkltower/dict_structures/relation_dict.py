"""This module contains the Relation Dictionary class."""
from typing import TypedDict


class RelationDict(TypedDict):
    """Relation Dictionary class.

    For the stable group the Heegner coefficients are keyed H0, Hxi, Hzeta and
    Hzeta_prime instead of Hn, Hh and Hu.
    .. code-block::
        {
            'N': int
            'group': str
            'provenance': str
            'lambda_coeff': str
            'Hn': str
            'Hh': str
            'Hu': str
        }
    """

    N: int
    group: str
    provenance: str
    lambda_coeff: str
    Hn: str
    Hh: str
    Hu: str
