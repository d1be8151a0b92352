"""This module contains the Rank Report Dictionary class."""
from typing import TypedDict


class RankReportDict(TypedDict):
    """Rank Report Dictionary class.

    Rationals are rendered as "p/q" strings.
    .. code-block::
        {
            'N': int
            'd': int
            'alpha1': str
            'alpha2': str
            'alpha3': str
            'alpha4': str
            'dim_cusp': int
            'rank': int
            'closed_form_rank': int
        }
    """

    N: int
    d: int
    alpha1: str
    alpha2: str
    alpha3: str
    alpha4: str
    dim_cusp: int
    rank: int
    closed_form_rank: int
