"""This module contains the Wall and Wall Report Dictionary classes."""
from typing import TypedDict

from hkltower.dict_structures.stratum_dict import StratumDict


class WallDict(TypedDict):
    """Wall Dictionary class.

    .. code-block::
        {
            'beta': str
            'k': int
            'case': int
            'centers': list[StratumDict]
        }
    """

    beta: str
    k: int
    case: int
    centers: list[StratumDict]


class WallReportDict(TypedDict):
    """Wall Report Dictionary class.

    .. code-block::
        {
            'N': int
            'walls': list[WallDict]
            'terminal_contraction': str
        }
    """

    N: int
    walls: list[WallDict]
    terminal_contraction: str
