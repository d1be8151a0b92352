"""This module contains the StratumKind class."""
from enum import Enum


class StratumKind(Enum):
    """StratumKind class which contains the enum of the tower strata shapes.

    Attributes
    ----------
    f_path: StratumKind
        Im f_{M,N}
    f_then_l: StratumKind
        Im(f_{M,N} o l_M), M = 3 mod 8
    f_then_m: StratumKind
        Im(f_{M,N} o m_M), M = 4 mod 8
    f_then_q: StratumKind
        Im(f_{M,N} o q_M), M = 5 mod 8
    """

    f_path = "f_path"
    f_then_l = "f_then_l"
    f_then_m = "f_then_m"
    f_then_q = "f_then_q"
