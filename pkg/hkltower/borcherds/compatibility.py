"""This module contains the compatibility of the first relation with f_N.

Pulling the first relation on F(N) back along f_N gives a relation on F(N-1),
which for N = 3, 4, 5 mod 8 must be the first relation on F(N-1) itself.
"""
import logging

from hkltower.borcherds.relations import first_relation
from hkltower.divisors.divisor_class import DivisorClass
from hkltower.divisors.maps import MapLabel
from hkltower.divisors.pullback import pullback
from hkltower.enums.map_kind import MapKind
from hkltower.exceptions import ConsistencyError, require_range
from hkltower.settings import FIRST_RELATION_MAX_N

logger = logging.getLogger(__name__)

# residues of N mod 8 at which the pullback is asserted
CHECKED_RESIDUES = (3, 4, 5)

# f_N is defined from N = 4
COMPATIBILITY_MIN_N = 4


def compatibility_defect(n: int) -> DivisorClass:
    """Get f_N* R(N) - R(N-1) for the first relations as classes on F(N-1)."""
    require_range("N", n, COMPATIBILITY_MIN_N, FIRST_RELATION_MAX_N)
    pulled = pullback(MapLabel(MapKind.f, n), first_relation(n).as_class())
    defect = pulled - first_relation(n - 1).as_class()
    logger.debug("f_%d* R(%d) - R(%d) = %s", n, n, n - 1, defect)
    return defect


def check_compatibility(n: int) -> bool:
    """Check the pullback of the first relation at N.

    Returns
    -------
    compatible: bool
        Whether the pullback is the first relation on F(N-1)

    Raises
    ------
    ConsistencyError
        If it is not and N is 3, 4 or 5 mod 8
    """
    defect = compatibility_defect(n)
    if defect.is_zero:
        return True
    if n % 8 in CHECKED_RESIDUES:
        raise ConsistencyError(
            f"ERROR: f_{n}* of the first relation differs from the relation on "
            f"F({n - 1}) by {defect}"
        )
    logger.warning("f_%d* of the first relation is off by %s", n, defect)
    return False


def compatibility_table(
    low: int = COMPATIBILITY_MIN_N, high: int = FIRST_RELATION_MAX_N
) -> dict[int, bool]:
    """Check every N in low..high."""
    return {n: check_compatibility(n) for n in range(low, high + 1)}
