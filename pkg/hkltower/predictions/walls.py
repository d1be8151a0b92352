"""This module contains the predicted walls of λ + βΔ(N).

For N >= 15 the walls sit at β = 1/k for k in 1..N-10, k != N-11. β = 1
contracts Δ^(1)(N); every other wall is a flip whose center is the union of
the centers of Tower(N) with t = k.
"""
from __future__ import annotations

import logging

import sympy

from hkltower.borcherds.relations import gritsenko_relation
from hkltower.dict_structures.wall_dict import WallDict, WallReportDict
from hkltower.divisors.space_label import HH
from hkltower.dtower.boundary import boundary_strata
from hkltower.enums.stratum_kind import StratumKind
from hkltower.exceptions import ConsistencyError, RangeError, require_range
from hkltower.predictions.stratum import Stratum
from hkltower.predictions.tower import centers
from hkltower.rationals import format_rational
from hkltower.report_strings import wall_notes
from hkltower.settings import MIN_N, TOWER_MIN_M, TOWER_MIN_N

logger = logging.getLogger(__name__)

# Δ stops being ample above this N
AMPLE_MAX_N = 10


def wall_indices(n: int) -> list[int]:
    """Get the k of the walls β = 1/k: 1..N-10 without N-11."""
    require_range("N", n, TOWER_MIN_N)
    return [k for k in range(1, n - 9) if k != n - 11]


def flip_case(n: int, k: int) -> int:
    """Get the case of the flip at β = 1/k, or 0 for the contraction at k = 1.

    Case 2 is k = 4 with N = 4 mod 8; case 3 is k = N - 2 mod 8 with k >= 3;
    cases 4 and 5 are k = N - 13 and k = N - 12; every other k is case 1,
    including k = 2 with N = 4 mod 8.

    Raises
    ------
    RangeError
        If 1/k is not a wall at N
    """
    if k not in wall_indices(n):
        raise RangeError(f"ERROR: β=1/{k} is not a wall at N={n}")
    if k == 1:
        return 0
    if k == 4 and n % 8 == 4:
        return 2
    if k >= 3 and (k - n + 2) % 8 == 0:
        return 3
    if k == n - 13:
        return 4
    if k == n - 12:
        return 5
    return 1


def predicted_centers(n: int, k: int) -> frozenset[tuple[StratumKind, int]]:
    """Get the (kind, M) labels of the centers the case of k names."""
    case = flip_case(n, k)
    if case == 0:
        return frozenset(boundary_strata(n, 1))
    if case == 1:
        return frozenset({(StratumKind.f_path, n - k)})
    if case == 2:
        return frozenset(
            {(StratumKind.f_path, n - 4), (StratumKind.f_then_l, n - 1)}
        )
    if case == 3:
        labels = {(StratumKind.f_then_l, n - k + 1)}
        if n - k >= TOWER_MIN_M:
            labels.add((StratumKind.f_path, n - k))
        return frozenset(labels)
    if case == 4:
        return frozenset({(StratumKind.f_then_q, 13)})
    return frozenset({(StratumKind.f_then_m, 12)})


class Wall:
    """Wall class.

    Attributes
    ----------
    k: int
        The wall is β = 1/k
    case: int
        The case of the prediction, 0 for the contraction
    centers: list[Stratum]
        The centers of Tower(N) with t = k
    """

    def __init__(self, k: int, case: int, centers: list[Stratum]) -> None:
        """Store the wall."""
        self.k = k
        self.case = case
        self.centers = list(centers)

    @property
    def beta(self) -> sympy.Rational:
        """Get β = 1/k."""
        return sympy.Rational(1, self.k)

    def description(self) -> str:
        """Describe the centers, joined by ∪."""
        return " ∪ ".join(stratum.description() for stratum in self.centers)

    def to_dict(self) -> WallDict:
        """Serialize the wall."""
        return {
            "beta": format_rational(self.beta),
            "k": self.k,
            "case": self.case,
            "centers": [stratum.to_dict() for stratum in self.centers],
        }


class WallReport:
    """WallReport class.

    The walls of λ + βΔ(N) ordered by β decreasing from 1.

    Attributes
    ----------
    n: int
        N
    walls: list[Wall]
        The walls, β strictly decreasing
    """

    def __init__(self, n: int, walls: list[Wall]) -> None:
        """Store the walls after checking their order.

        Raises
        ------
        ConsistencyError
            If β does not strictly decrease
        """
        betas = [wall.beta for wall in walls]
        if any(a <= b for a, b in zip(betas, betas[1:])):
            raise ConsistencyError(f"ERROR: walls at N={n} are not decreasing in β")
        self.n = n
        self.walls = list(walls)

    @property
    def betas(self) -> list[sympy.Rational]:
        """Get the β values."""
        return [wall.beta for wall in self.walls]

    def terminal_contraction(self) -> str:
        """Describe the contraction at β = 1."""
        first = self.walls[0]
        return wall_notes["contraction"].format(n=self.n, centers=first.description())

    def to_dict(self) -> WallReportDict:
        """Serialize the report."""
        return {
            "N": self.n,
            "walls": [wall.to_dict() for wall in self.walls],
            "terminal_contraction": self.terminal_contraction(),
        }


def walls(n: int) -> WallReport:
    """Get the predicted walls at N with their centers.

    Raises
    ------
    ConsistencyError
        If the centers with t = k differ from those the case names, or some
        center has t outside the wall list
    """
    require_range("N", n, TOWER_MIN_N)
    by_t: dict[int, list[Stratum]] = {}
    for stratum in centers(n):
        by_t.setdefault(stratum.t_value(), []).append(stratum)
    indices = wall_indices(n)
    if set(by_t) != set(indices):
        raise ConsistencyError(
            f"ERROR: center t values {sorted(by_t)} at N={n} differ from the walls"
        )
    found = []
    for k in indices:
        case = flip_case(n, k)
        strata = sorted(by_t[k], key=lambda stratum: (stratum.dim, stratum.kind.value))
        labels = frozenset(stratum.label for stratum in strata)
        if labels != predicted_centers(n, k):
            raise ConsistencyError(
                f"ERROR: centers at β=1/{k}, N={n} are "
                f"{[str(stratum) for stratum in strata]}, case {case} names others"
            )
        found.append(Wall(k, case, strata))
    logger.info("N=%d: %d walls", n, len(found))
    return WallReport(n, found)


def note_for_small_N(n: int) -> str:  # noqa: N802
    """Get the note that replaces the wall list for N below 15.

    Raises
    ------
    RangeError
        If N is outside 3..14
    """
    require_range("N", n, MIN_N, TOWER_MIN_N - 1)
    solved = gritsenko_relation(n).render_solved(HH)
    key = "ample" if n <= AMPLE_MAX_N else "movable"
    return wall_notes[key].format(n=n, gritsenko=solved)
