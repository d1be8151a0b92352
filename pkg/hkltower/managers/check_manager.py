"""This module contains the CheckManager class."""
import logging
from collections.abc import Callable

import sympy

from hkltower.borcherds.compatibility import compatibility_table
from hkltower.borcherds.heegner import check_heegner, quasi_pullback_weight
from hkltower.borcherds.relations import first_relation, gritsenko_relation
from hkltower.borcherds.relations import mu_table as computed_mu_table
from hkltower.divisors.calculus import (
    TAILS,
    curve_pairing,
    git_polarization,
    restrict_polarization,
)
from hkltower.divisors.maps import tower_path
from hkltower.divisors.space_label import HH, HU, LAMBDA, SpaceLabel
from hkltower.dtower.decorated_lattice import DecoratedDLattice
from hkltower.enums.embedding_variant import EmbeddingVariant
from hkltower.enums.vector_kind import VectorKind
from hkltower.exceptions import ConsistencyError, SpaceMismatchError
from hkltower.lattices.constructors import d_lattice, e_lattice
from hkltower.lattices.enumeration import root_count, short_vectors_bruteforce
from hkltower.lattices.quadratic_form import discriminant_group
from hkltower.managers.embedding_manager import EmbeddingManager
from hkltower.picard.gauss import check_milgram
from hkltower.picard.rank import picard_rank
from hkltower.predictions.audit import nef_threshold, positivity_audit
from hkltower.predictions.tower import shift_by_one
from hkltower.predictions.walls import walls
from hkltower.report_strings import check_lines
from hkltower.settings import (
    BETA_SAMPLE,
    FIRST_RELATION_MAX_N,
    MIN_N,
    ORACLE_MAX_RANK,
    RANK_TABLE_MAX_N,
    SECOND_RELATION_MAX_N,
    TOWER_MIN_N,
)
from hkltower.tower_data import (
    curve_rows,
    e_root_counts,
    git_curve_pairings,
    mu_table,
    rank_table,
    wall_denominators,
)

logger = logging.getLogger(__name__)

# indices of the restriction suite
RESTRICTION_MIN_N = 11
# longest composition path of the restriction suite
RESTRICTION_MAX_PATH = 3


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ConsistencyError(f"ERROR: {message}")


def check_lattice() -> str:
    """Count the roots of D_1..D_12 and E_2..E_8, with the box oracle."""
    for m in range(1, 13):
        lattice = d_lattice(m)
        count = root_count(lattice)
        _expect(count == 2 * m * (m - 1), f"|R(D_{m})| = {count}")
        if m <= ORACLE_MAX_RANK:
            oracle = len(short_vectors_bruteforce(lattice, -2))
            _expect(oracle == count, f"oracle gives {oracle} roots of D_{m}")
    for r, expected in e_root_counts.items():
        lattice = e_lattice(r)
        count = root_count(lattice)
        _expect(count == expected, f"|R(E_{r})| = {count}")
        if r <= ORACLE_MAX_RANK:
            oracle = len(short_vectors_bruteforce(lattice, -2))
            _expect(oracle == count, f"oracle gives {oracle} roots of E_{r}")
    return "D_1..D_12, E_2..E_8"


def check_dtower() -> str:
    """Check the labels, A_{Λ_N} = A_{D_{N-2}} and the minimal vectors of Λ_N."""
    for n in range(MIN_N, FIRST_RELATION_MAX_N + 1):
        dlattice = DecoratedDLattice(n)
        dlattice.check_invariants()
        _expect(
            dlattice.form.is_isomorphic(discriminant_group(d_lattice(n - 2))),
            f"A_(Λ_{n}) is not isomorphic to A_(D_{n - 2})",
        )
        _expect(
            dlattice.classify(dlattice.minimal_vector(dlattice.decoration))
            is VectorKind.hyperelliptic,
            f"minimal ξ vector at N={n} is not hyperelliptic",
        )
        label = min(dlattice.unigonal_labels, key=lambda label: label.value)
        unigonal = dlattice.minimal_vector(label)
        if unigonal is not None:
            _expect(
                dlattice.classify(unigonal) is VectorKind.unigonal,
                f"minimal unigonal vector at N={n} is not unigonal",
            )
    return f"N={MIN_N}..{FIRST_RELATION_MAX_N}"


def check_rank() -> str:
    """Compare the Picard ranks with the table and check Milgram."""
    for n in range(MIN_N, RANK_TABLE_MAX_N + 1):
        rank = picard_rank(n)
        _expect(rank == rank_table[n], f"rank {rank} at N={n}")
    for n in range(MIN_N, FIRST_RELATION_MAX_N + 1):
        check_milgram(DecoratedDLattice(n))
    return f"ranks N={MIN_N}..{RANK_TABLE_MAX_N}, Milgram to {FIRST_RELATION_MAX_N}"


def check_mu() -> str:
    """Compare the computed Heegner coefficients and weights with closed forms."""
    manager = EmbeddingManager()
    computed = computed_mu_table()
    _expect(computed == mu_table, f"μ table {computed}")
    for variant, high in (
        (EmbeddingVariant.D, FIRST_RELATION_MAX_N),
        (EmbeddingVariant.E8D, SECOND_RELATION_MAX_N),
    ):
        for n in range(MIN_N, high + 1):
            embedding = manager.embedding(n, variant)
            quasi_pullback_weight(embedding)
            check_heegner(embedding, manager.coefficients(n, variant))
    return "μ(3..25), both embeddings"


def check_relations() -> str:
    """Check the relation at N = 19 and the Gritsenko relation."""
    text = str(first_relation(19))
    _expect(text == "108 λ = 1 Hn + 14 Hh + 78 Hu", f"first relation {text}")
    for n in range(4, 11):
        solved = gritsenko_relation(n).solve_for(HH)
        _expect(
            solved.coeffs == {LAMBDA: sympy.Integer(2 * (14 - n))}
            and solved.space == SpaceLabel.F(n),
            f"Gritsenko at N={n} gives {solved}",
        )
    solved = gritsenko_relation(14).solve_for(HH)
    _expect(solved.coeffs == {HU: 1}, f"Gritsenko at N=14 gives {solved}")
    return "N=19, Gritsenko N=4..10 and 14"


def check_curves() -> str:
    """Pair the curve fixtures with the relation and the GIT class at N = 19."""
    relation = first_relation(19).as_class()
    polarization = git_polarization(19)
    for curve in curve_rows:
        value = curve_pairing(curve, relation)
        _expect(value == 0, f"{curve} pairs to {value} with the relation")
        value = curve_pairing(curve, polarization)
        _expect(
            value == git_curve_pairings[curve], f"{curve} pairs to {value} with L(19)"
        )
    return "Gamma1..Gamma4"


def check_compatibility() -> str:
    """Pull the first relation back along every f_N."""
    table = compatibility_table()
    off = sorted(n for n, ok in table.items() if not ok)
    return "all N" if not off else f"reported off at N={off}"


def check_restriction() -> str:
    """Compare iterated pullbacks with the closed forms on short paths."""
    count = 0
    for n in range(RESTRICTION_MIN_N, FIRST_RELATION_MAX_N + 1):
        for depth in range(RESTRICTION_MAX_PATH + 1):
            for tail in TAILS:
                if depth + len(tail) > RESTRICTION_MAX_PATH:
                    continue
                try:
                    path = tower_path(n, depth, tail)
                except SpaceMismatchError:
                    continue
                for beta in BETA_SAMPLE:
                    restrict_polarization(n, path, beta)
                    count += 1
    return f"{count} restrictions"


def check_walls() -> str:
    """Compare walls(18) and walls(19) with the recorded denominators."""
    for n, denominators in wall_denominators.items():
        report = walls(n)
        ks = tuple(wall.k for wall in report.walls)
        _expect(ks == denominators, f"walls at N={n} have k={ks}")
    for n in range(TOWER_MIN_N, FIRST_RELATION_MAX_N + 1):
        walls(n)
    return f"N={TOWER_MIN_N}..{FIRST_RELATION_MAX_N}"


def check_audit() -> str:
    """Audit every tower below the threshold, at sampled β and at mediants."""
    for n in range(TOWER_MIN_N, FIRST_RELATION_MAX_N + 1):
        threshold = nef_threshold(n)
        betas = {sympy.Rational(beta) for beta in BETA_SAMPLE}
        betas = {beta for beta in betas if 0 < beta < threshold}
        betas.add(sympy.Rational(1, n - 9))
        betas.add(threshold / 2)
        for beta in sorted(betas):
            report = positivity_audit(n, beta)
            _expect(report.passes, f"audit fails at N={n}, β={beta}")
    return f"N={TOWER_MIN_N}..{FIRST_RELATION_MAX_N}"


def check_shift() -> str:
    """Check the shift by one of center t values."""
    for n in range(TOWER_MIN_N + 1, FIRST_RELATION_MAX_N + 1):
        _expect(shift_by_one(n), f"shift by one fails at N={n}")
    return f"N={TOWER_MIN_N + 1}..{FIRST_RELATION_MAX_N}"


class CheckManager:
    """CheckManager class.

    Runs the named self-check suites and collects their outcome.

    Attributes
    ----------
    _suites: dict[str, Callable[[], str]]
        The suites in run order
    _results: dict[str, tuple[bool, str]]
        Pass flag and detail of every suite run so far

    Methods
    -------
    __new__(cls) -> CheckManager
        Check if the singleton already exists, return the instance
    run(self, names) -> bool
        Run suites and tell whether all passed
    summary_lines(self) -> list[str]
        One line per suite run plus a total
    """

    def __new__(cls) -> "CheckManager":
        """Create a singleton object.

        If the singleton already exists returns the previous object
        """
        if not hasattr(cls, "instance"):
            cls.instance = super(CheckManager, cls).__new__(cls)
            cls.instance._ready = False
        return cls.instance

    def __init__(self) -> None:
        """Register the suites the first time only."""
        if self._ready:
            return
        self._suites: dict[str, Callable[[], str]] = {
            "lattice": check_lattice,
            "dtower": check_dtower,
            "rank": check_rank,
            "mu": check_mu,
            "relations": check_relations,
            "curves": check_curves,
            "compatibility": check_compatibility,
            "restriction": check_restriction,
            "walls": check_walls,
            "audit": check_audit,
            "shift": check_shift,
        }
        self._results: dict[str, tuple[bool, str]] = {}
        self._ready = True

    @property
    def suite_names(self) -> list[str]:
        """Get the suite names in run order."""
        return list(self._suites)

    @property
    def results(self) -> dict[str, tuple[bool, str]]:
        """Get a copy of the results."""
        return dict(self._results)

    def run(self, names=None) -> bool:
        """Run the named suites, every suite when names is empty.

        Raises
        ------
        KeyError
            If a name is not a suite
        """
        names = list(names or self._suites)
        for name in names:
            suite = self._suites[name]
            try:
                self._results[name] = (True, suite())
            except ConsistencyError as error:
                logger.error("suite %s failed: %s", name, error)
                self._results[name] = (False, str(error))
        return all(self._results[name][0] for name in names)

    def summary_lines(self) -> list[str]:
        """Render one line per suite run and a total line."""
        lines = [
            check_lines["pass" if ok else "fail"].format(suite=name, detail=detail)
            for name, (ok, detail) in self._results.items()
        ]
        passed = sum(1 for ok, _ in self._results.values() if ok)
        lines.append(
            check_lines["summary"].format(passed=passed, total=len(self._results))
        )
        return lines

    def clear(self) -> None:
        """Forget the results."""
        self._results.clear()
