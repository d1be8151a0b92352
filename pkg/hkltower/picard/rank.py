"""This module contains the Picard rank of F(Λ_N, Õ⁺).

The rank is one more than the dimension of the space of vector valued cusp
forms of weight k = 1 + N/2 for the Weil representation of A_{Λ_N}, given by
dim = d + dk/12 - α₁ - α₂ - α₃ - α₄. The terms use q/2 mod 1 on A_{Λ_N}.
"""
import logging
from math import isqrt

import sympy

from hkltower.dtower.decorated_lattice import DecoratedDLattice
from hkltower.exceptions import ConsistencyError, RangeError, require_range
from hkltower.lattices.quadratic_form import FiniteQuadraticForm
from hkltower.picard.cyclotomic import Cyclotomic8
from hkltower.picard.gauss import form_gauss_sum
from hkltower.picard.rank_report import RankReport
from hkltower.settings import FIRST_RELATION_MAX_N, MIN_N
from hkltower.tower_data import asserted_rank_f

logger = logging.getLogger(__name__)


def closed_form_rank(n: int) -> int:
    """Get the rank from the closed forms in N.

    ⌊(N-2)/8⌋ + 1 for N odd and ⌊(N-4)/6⌋ + c + 1 for N even, where c is -1,
    0, +1 for N = 2, {0, 6}, 4 mod 8.
    """
    require_range("N", n, MIN_N)
    if n % 2:
        return (n - 2) // 8 + 1
    correction = {2: -1, 0: 0, 6: 0, 4: 1}[n % 8]
    return (n - 4) // 6 + correction + 1


def asserted_rank_F(n: int) -> int:  # noqa: N802
    """Get the asserted rank of Pic(F(N)) for N in {18, 19, 20}."""
    try:
        return asserted_rank_f[n]
    except KeyError:
        raise RangeError(f"ERROR: no asserted rank of Pic(F({n}))") from None


def _orbits(form: FiniteQuadraticForm) -> list[tuple[int, ...]]:
    """Get one representative of every class of A up to sign."""
    seen = set()
    representatives = []
    for element in form.elements():
        if element in seen:
            continue
        seen.add(element)
        seen.add(form.neg(element))
        representatives.append(element)
    return representatives


def _fraction(value) -> sympy.Rational:
    return value - sympy.floor(value)


def _sqrt_order(form: FiniteQuadraticForm) -> int:
    root = isqrt(form.order)
    if root * root != form.order:
        raise ConsistencyError(f"ERROR: |A| = {form.order} is not a square")
    return root


def _alpha1(form: FiniteQuadraticForm, n: int, d: int, weight) -> sympy.Rational:
    twist = Cyclotomic8.exp_pi_i((2 * weight + 2 - n) / 4)
    real = (twist * form_gauss_sum(form, 2)).real_part()
    if not real.is_rational:
        raise ConsistencyError(
            f"ERROR: Bruinier formula inconsistency: α₁ irrational at N={n}"
        )
    return sympy.Rational(d, 4) - real.a / (4 * _sqrt_order(form))


def _alpha2(form: FiniteQuadraticForm, n: int, d: int) -> sympy.Rational:
    total = form_gauss_sum(form, 1) + form_gauss_sum(form, -3)
    angle = sympy.pi * n / 12
    twisted = (
        sympy.cos(angle) * total.real_part().to_sympy()
        + sympy.sin(angle) * total.imaginary_part().to_sympy()
    )
    scaled = sympy.expand(twisted * sympy.sqrt(3))
    if not scaled.is_Rational:
        scaled = sympy.nsimplify(sympy.radsimp(scaled))
    if not scaled.is_Rational:
        raise ConsistencyError(
            f"ERROR: Bruinier formula inconsistency: α₂ irrational at N={n}"
        )
    return sympy.Rational(d, 3) + scaled / (9 * _sqrt_order(form))


def rank_report(n: int) -> RankReport:
    """Compute every term of the dimension formula at N.

    Raises
    ------
    ConsistencyError
        If the dimension is not a nonnegative integer
    """
    require_range("N", n, MIN_N)
    form = DecoratedDLattice(n).form
    representatives = _orbits(form)
    d = len(representatives)
    weight = 1 + sympy.Rational(n, 2)
    alpha1 = _alpha1(form, n, d, weight)
    alpha2 = _alpha2(form, n, d)
    alpha3 = sum(
        (_fraction(-form.q(element) / 2) for element in representatives),
        sympy.Integer(0),
    )
    alpha4 = sympy.Integer(
        sum(1 for element in representatives if form.q(element) == 0)
    )
    dimension = d + d * weight / 12 - alpha1 - alpha2 - alpha3 - alpha4
    if not dimension.is_Integer or dimension < 0:
        raise ConsistencyError(
            f"ERROR: Bruinier formula inconsistency at N={n}: dim = {dimension}"
        )
    logger.info(
        "N=%d: d=%d alphas=(%s, %s, %s, %s) dim=%s",
        n,
        d,
        alpha1,
        alpha2,
        alpha3,
        alpha4,
        dimension,
    )
    return RankReport(
        n, d, (alpha1, alpha2, alpha3, alpha4), int(dimension), closed_form_rank(n)
    )


def cusp_form_dim(n: int) -> int:
    """Get the dimension of the space of cusp forms attached to Λ_N."""
    return rank_report(n).dim_cusp


def picard_rank(n: int) -> int:
    """Get the Picard rank of F(Λ_N, Õ⁺), checked against the closed form.

    Raises
    ------
    RangeError
        If N is outside 3..25
    ConsistencyError
        If the dimension formula and the closed form disagree
    """
    require_range("N", n, MIN_N, FIRST_RELATION_MAX_N)
    report = rank_report(n)
    if not report.matches:
        raise ConsistencyError(
            f"ERROR: rank {report.rank} at N={n} differs from the closed form "
            f"{report.closed_form_rank}"
        )
    return report.rank
