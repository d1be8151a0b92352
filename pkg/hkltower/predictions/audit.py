"""This module contains the positivity audit of λ + βΔ(N) on Tower(N).

Restricted to a stratum X the class is (1 - t_N(X)β)λ + D_X with D_X
effective. For Im f_{M,N} with M <= 13 this needs H_h(M) rewritten through
the Gritsenko relation on F(M).
"""
import logging

import sympy

from hkltower.borcherds.relations import gritsenko_relation
from hkltower.dict_structures.audit_dict import AuditDict, AuditRowDict
from hkltower.divisors.calculus import restrict_polarization
from hkltower.divisors.divisor_class import DivisorClass
from hkltower.divisors.space_label import HH, LAMBDA
from hkltower.exceptions import ConsistencyError, require_range
from hkltower.predictions.stratum import Stratum
from hkltower.predictions.tower import tower
from hkltower.rationals import as_rational, format_rational

logger = logging.getLogger(__name__)

# first N of the D-tower at which Δ is not movable
NEF_MIN_N = 11


def nef_threshold(n: int) -> sympy.Rational:
    """Get the β below which λ + βΔ(N) is positive on complete curves.

    1/(N-10) for N >= 11, except 1/4 for N = 12.
    """
    require_range("N", n, NEF_MIN_N)
    if n == 12:
        return sympy.Rational(1, 4)
    return sympy.Rational(1, n - 10)


def restriction_on(stratum: Stratum, beta) -> DivisorClass:
    """Restrict λ + βΔ(N) to a stratum, rewriting H_h(M) when M <= 13."""
    restriction = restrict_polarization(stratum.n, stratum.path(), beta)
    if stratum.is_gritsenko_case:
        solved = gritsenko_relation(stratum.m).solve_for(HH)
        restriction = restriction.substitute(HH, solved)
    return restriction


class AuditRow:
    """AuditRow class.

    Attributes
    ----------
    stratum: Stratum
        The stratum
    restriction: DivisorClass
        The restricted class after the Gritsenko rewrite
    """

    def __init__(self, stratum: Stratum, restriction: DivisorClass) -> None:
        """Store the restriction."""
        self.stratum = stratum
        self.restriction = restriction

    @property
    def lambda_coeff(self) -> sympy.Rational:
        """Get the coefficient of λ."""
        return self.restriction.coeff(LAMBDA)

    @property
    def remainder(self) -> DivisorClass:
        """Get D_X, the restriction without its λ part."""
        return self.restriction.without(LAMBDA)

    @property
    def passes(self) -> bool:
        """Check that λ has a positive coefficient and D_X is effective."""
        return self.lambda_coeff > 0 and all(
            value >= 0 for value in self.remainder.coeffs.values()
        )

    def to_dict(self) -> AuditRowDict:
        """Serialize the row."""
        return {
            "stratum": self.stratum.description(),
            "t_value": self.stratum.t_value(),
            "lambda_coeff": format_rational(self.lambda_coeff),
            "remainder": {
                key: format_rational(value)
                for key, value in self.remainder.coeffs.items()
            },
            "passes": self.passes,
        }


class AuditReport:
    """AuditReport class.

    Attributes
    ----------
    n: int
        N
    beta: sympy.Rational
        β
    rows: list[AuditRow]
        One row per stratum of Tower(N)
    """

    def __init__(self, n: int, beta: sympy.Rational, rows: list[AuditRow]) -> None:
        """Store the rows."""
        self.n = n
        self.beta = beta
        self.rows = list(rows)

    @property
    def threshold(self) -> sympy.Rational:
        """Get 1/(N-10)."""
        return nef_threshold(self.n)

    @property
    def passes(self) -> bool:
        """Check every row."""
        return all(row.passes for row in self.rows)

    def to_dict(self) -> AuditDict:
        """Serialize the report."""
        return {
            "N": self.n,
            "beta": format_rational(self.beta),
            "threshold": format_rational(self.threshold),
            "rows": [row.to_dict() for row in self.rows],
            "passes": self.passes,
        }


def positivity_audit(n: int, beta) -> AuditReport:
    """Restrict λ + βΔ(N) to every stratum of Tower(N).

    Raises
    ------
    ConsistencyError
        If some λ coefficient is not 1 - tβ, or some row fails while β is below
        the threshold
    """
    beta = as_rational(beta)
    rows = []
    for stratum in tower(n):
        row = AuditRow(stratum, restriction_on(stratum, beta))
        expected = 1 - (stratum.t_value() or 0) * beta
        if row.lambda_coeff != expected:
            raise ConsistencyError(
                f"ERROR: λ coefficient {row.lambda_coeff} on {stratum}, "
                f"expected {expected}"
            )
        rows.append(row)
    report = AuditReport(n, beta, rows)
    if beta < report.threshold and not report.passes:
        failing = [str(row.stratum) for row in rows if not row.passes]
        raise ConsistencyError(
            f"ERROR: positivity fails below 1/(N-10) at N={n}, β={beta}: {failing}"
        )
    logger.info("audit N=%d β=%s passes=%s", n, beta, report.passes)
    return report
