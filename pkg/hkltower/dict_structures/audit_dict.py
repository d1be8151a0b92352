"""This module contains the Audit Row and Audit Dictionary classes."""
from typing import TypedDict


class AuditRowDict(TypedDict):
    """Audit Row Dictionary class.

    One tower stratum restricted at a given beta.
    .. code-block::
        {
            'stratum': str
            't_value': int | None
            'lambda_coeff': str
            'remainder': dict[str, str]
            'passes': bool
        }
    """

    stratum: str
    t_value: int | None
    lambda_coeff: str
    remainder: dict[str, str]
    passes: bool


class AuditDict(TypedDict):
    """Audit Dictionary class.

    .. code-block::
        {
            'N': int
            'beta': str
            'threshold': str
            'rows': list[AuditRowDict]
            'passes': bool
        }
    """

    N: int
    beta: str
    threshold: str
    rows: list[AuditRowDict]
    passes: bool
