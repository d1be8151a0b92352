"""This module contains the Gauss sums of discriminant forms."""
import logging

from hkltower.dtower.decorated_lattice import DecoratedDLattice
from hkltower.exceptions import ConsistencyError
from hkltower.lattices.quadratic_form import FiniteQuadraticForm
from hkltower.picard.cyclotomic import Cyclotomic8

logger = logging.getLogger(__name__)


def form_gauss_sum(form: FiniteQuadraticForm, n: int) -> Cyclotomic8:
    """Get Σ exp(πi n q(γ)) over the elements γ of a finite quadratic form.

    The q values must be multiples of 1/4, which holds for every D-lattice.
    """
    total = Cyclotomic8()
    for element in form.elements():
        total = total + Cyclotomic8.exp_pi_i(n * form.q(element))
    return total


def gauss_sum(dlattice: DecoratedDLattice, n: int) -> Cyclotomic8:
    """Get G(n, Λ_N) = Σ_{γ ∈ A} exp(πi n q(γ)), exactly in Q(ζ₈)."""
    return form_gauss_sum(dlattice.form, n)


def milgram_value(n: int) -> Cyclotomic8:
    """Get √|A| exp(2πi sig/8) = 2 ζ₈^(2 - N) for Λ_N of signature (2, N)."""
    return Cyclotomic8.zeta_power((2 - n) % 8) * 2


def check_milgram(dlattice: DecoratedDLattice) -> Cyclotomic8:
    """Check G(1, Λ_N) against the signature and return it.

    Raises
    ------
    ConsistencyError
        If the Gauss sum differs from 2 ζ₈^(2 - N)
    """
    value = gauss_sum(dlattice, 1)
    expected = milgram_value(dlattice.n)
    if value != expected:
        raise ConsistencyError(
            f"ERROR: G(1, Λ_{dlattice.n}) = {value!r}, signature gives {expected!r}"
        )
    logger.debug("Milgram identity holds at N=%d", dlattice.n)
    return value
