import pytest
import sympy

from hkltower.divisors.divisor_class import DivisorClass
from hkltower.divisors.space_label import HH, HU, SpaceLabel
from hkltower.dtower.boundary import boundary_divisor, boundary_strata
from hkltower.dtower.decorated_lattice import DecoratedDLattice, make_dlattice
from hkltower.dtower.invariants import orbit_count, tau, unigonal_residue
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.stratum_kind import StratumKind
from hkltower.enums.vector_kind import VectorKind
from hkltower.exceptions import (
    LatticeError,
    NotPrimitiveError,
    RangeError,
    ZeroVectorError,
)
from hkltower.lattices.constructors import d_lattice
from hkltower.lattices.quadratic_form import discriminant_group

HALF = sympy.Rational(1, 2)


def zeros(n):
    return [0] * (n - 2)


@pytest.mark.parametrize("n", range(3, 26))
def test_label_invariants(n):
    DecoratedDLattice(n).check_invariants()


@pytest.mark.parametrize("n", range(3, 26))
def test_minimal_xi_vector_is_hyperelliptic(n):
    dlattice = DecoratedDLattice(n)
    vector = dlattice.minimal_vector(DiscLabel.xi)
    assert dlattice.classify(vector) is VectorKind.hyperelliptic
    assert dlattice.is_reflective(vector)


@pytest.mark.parametrize("n", [11, 12, 13, 19, 20, 21, 23])
def test_minimal_zeta_vector_is_unigonal(n):
    dlattice = DecoratedDLattice(n)
    vector = dlattice.minimal_vector(DiscLabel.zeta)
    assert dlattice.classify(vector) is VectorKind.unigonal


@pytest.mark.parametrize("n", [10, 18])
def test_no_unigonal_vector_when_residue_is_zero(n):
    dlattice = DecoratedDLattice(n)
    assert dlattice.minimal_vector(DiscLabel.zeta) is None
    assert dlattice.find_vector(VectorKind.unigonal) is None


@pytest.mark.parametrize("n, reflective", [(19, True), (20, True), (21, False)])
def test_unigonal_reflectivity_follows_tau(n, reflective):
    dlattice = DecoratedDLattice(n)
    vector = dlattice.minimal_vector(DiscLabel.zeta)
    assert dlattice.is_reflective(vector) is reflective


def test_nodal_vector():
    dlattice = DecoratedDLattice(19)
    vector = dlattice.vector_from_frame((1, -1, 0, 0), zeros(19))
    assert dlattice.classify(vector) is VectorKind.nodal
    payload = dlattice.classification(vector)
    assert payload["square"] == -2
    assert payload["divisibility"] == 1
    assert payload["disc_class"] == "0"
    assert payload["reflective"] is True


def test_zero_vector_is_rejected():
    dlattice = DecoratedDLattice(7)
    with pytest.raises(ZeroVectorError):
        dlattice.classify(dlattice.vector_from_frame((0, 0, 0, 0), zeros(7)))


def test_non_primitive_vector_is_rejected():
    dlattice = DecoratedDLattice(7)
    with pytest.raises(NotPrimitiveError):
        dlattice.classify(dlattice.vector_from_frame((2, -2, 0, 0), zeros(7)))


def test_frame_needs_even_coordinate_sum():
    with pytest.raises(LatticeError):
        DecoratedDLattice(7).vector_from_frame((0, 0, 0, 0), [1, 0, 0, 0, 0])


def test_eichler_equivalence_swaps_zeta_classes():
    dlattice = DecoratedDLattice(20)
    zeta = dlattice.minimal_vector(DiscLabel.zeta)
    zeta_prime = dlattice.minimal_vector(DiscLabel.zeta_prime)
    assert dlattice.eichler_equivalent(zeta, zeta_prime)
    xi = dlattice.minimal_vector(DiscLabel.xi)
    assert not dlattice.eichler_equivalent(xi, zeta)


def test_decoration_must_have_square_one():
    with pytest.raises(LatticeError):
        DecoratedDLattice(19, DiscLabel.zeta)


def test_six_mod_eight_accepts_every_decoration():
    for label in (DiscLabel.xi, DiscLabel.zeta, DiscLabel.zeta_prime):
        assert make_dlattice(22, label).decoration is label


def test_n_below_three_is_rejected():
    with pytest.raises(RangeError):
        DecoratedDLattice(2)


@pytest.mark.parametrize(
    "n, expected_tau, expected_orbits",
    [(11, 1, 3), (12, 1, 4), (13, 2, 3), (18, 2, 4), (19, 1, 3), (20, 1, 4)],
)
def test_invariants(n, expected_tau, expected_orbits):
    assert tau(n) == expected_tau
    assert orbit_count(n) == expected_orbits
    assert unigonal_residue(n) == (n - 2) % 8


def test_boundary_divisor():
    assert boundary_divisor(19) == DivisorClass(
        SpaceLabel.F(19), {HH: HALF, HU: HALF}
    )
    assert boundary_divisor(18) == DivisorClass(SpaceLabel.F(18), {HH: HALF})


def test_boundary_strata():
    assert boundary_strata(19, 1) == (
        (StratumKind.f_path, 18),
        (StratumKind.f_then_l, 19),
    )
    assert boundary_strata(20, 1) == (
        (StratumKind.f_path, 19),
        (StratumKind.f_then_m, 20),
    )
    assert boundary_strata(19, 9) == (
        (StratumKind.f_path, 10),
        (StratumKind.f_then_l, 11),
    )
    assert boundary_strata(19, 2) == ((StratumKind.f_path, 17),)


@pytest.mark.parametrize("n", range(3, 26))
def test_discriminant_form_matches_the_d_factor(n):
    form = DecoratedDLattice(n).form
    assert form.is_isomorphic(discriminant_group(d_lattice(n - 2)))


def test_discriminant_forms_of_different_d_lattices_differ():
    assert not DecoratedDLattice(6).form.is_isomorphic(
        discriminant_group(d_lattice(5))
    )
