"""This module contains the Stratum Dictionary class."""
from typing import TypedDict


class StratumDict(TypedDict):
    """Stratum Dictionary class.

    .. code-block::
        {
            'kind': str
            'M': int
            'N': int
            'dim': int
            't_value': int | None
            'description': str
        }
    """

    kind: str
    M: int
    N: int
    dim: int
    t_value: int | None
    description: str
