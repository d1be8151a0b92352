import pytest

from hkltower.dtower.decorated_lattice import make_dlattice
from hkltower.enums.vector_kind import VectorKind
from hkltower.exceptions import IndefiniteLatticeError, LatticeError
from hkltower.lattices.constructors import (
    a_lattice,
    d_lattice,
    direct_sum,
    e_lattice,
    even_unimodular,
    hyperbolic_plane,
    rescale,
    standard,
)
from hkltower.lattices.enumeration import root_count, short_vectors_bruteforce
from hkltower.lattices.lattice import Lattice
from hkltower.lattices.quadratic_form import discriminant_group
from hkltower.lattices.sublattice import Sublattice
from hkltower.settings import ORACLE_MAX_RANK
from hkltower.tower_data import e_root_counts


@pytest.mark.parametrize("m", range(1, 9))
def test_d_root_count(m):
    assert root_count(d_lattice(m)) == 2 * m * (m - 1)


@pytest.mark.slow
@pytest.mark.parametrize("m", range(9, 13))
def test_d_root_count_high_rank(m):
    assert root_count(d_lattice(m)) == 2 * m * (m - 1)


@pytest.mark.parametrize("r, expected", sorted(e_root_counts.items()))
def test_e_root_count(r, expected):
    assert root_count(e_lattice(r)) == expected


@pytest.mark.parametrize("m", range(1, ORACLE_MAX_RANK + 1))
def test_box_oracle_agrees_on_d(m):
    lattice = d_lattice(m)
    assert len(short_vectors_bruteforce(lattice, -2)) == root_count(lattice)


@pytest.mark.parametrize("r", range(2, ORACLE_MAX_RANK + 1))
def test_box_oracle_agrees_on_e(r):
    lattice = e_lattice(r)
    assert len(short_vectors_bruteforce(lattice, -2)) == root_count(lattice)


def test_box_oracle_rejects_large_rank():
    with pytest.raises(LatticeError):
        short_vectors_bruteforce(e_lattice(8), -2)


def test_hyperbolic_plane_gram():
    assert hyperbolic_plane().gram == ((0, 1), (1, 0))
    assert hyperbolic_plane(2).gram == ((0, 2), (2, 0))


def test_a2_gram():
    assert a_lattice(2).gram == ((-2, 1), (1, -2))


def test_root_count_needs_definite_lattice():
    with pytest.raises(IndefiniteLatticeError):
        root_count(hyperbolic_plane())


@pytest.mark.parametrize("bad", [0, -3])
def test_d_lattice_rank_must_be_positive(bad):
    with pytest.raises(LatticeError):
        d_lattice(bad)


def test_e8_is_unimodular():
    assert e_lattice(8).is_unimodular
    assert abs(e_lattice(8).determinant) == 1


@pytest.mark.parametrize("m", [4, 5, 6])
def test_d_discriminant_has_order_four(m):
    assert discriminant_group(d_lattice(m)).order == 4


def test_direct_sum_adds_ranks():
    lattice = direct_sum(hyperbolic_plane(), hyperbolic_plane(), d_lattice(3))
    assert lattice.rank == 7
    assert lattice.signature() == (2, 5)
    assert abs(lattice.determinant) == 4


def test_rescale_multiplies_the_form():
    lattice = rescale(hyperbolic_plane(), 2)
    assert lattice.gram == ((0, 2), (2, 0))
    assert lattice.determinant == -4
    with pytest.raises(LatticeError):
        rescale(hyperbolic_plane(), 0)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("U", hyperbolic_plane()),
        ("U(2)", hyperbolic_plane(2)),
        ("A_2", a_lattice(2)),
        ("D_5", d_lattice(5)),
        ("E_{7}", e_lattice(7)),
        ("II_{2,10}", even_unimodular(2, 10)),
    ],
)
def test_standard_names(name, expected):
    assert standard(name) == expected


def test_standard_e2_gram():
    assert standard("E_2").gram == ((-4, 1), (1, -2))


@pytest.mark.parametrize("name", ["E_9", "E_1", "II_{2,3}", "II_{3,2}", "F_4", ""])
def test_standard_rejects_bad_names(name):
    with pytest.raises(LatticeError):
        standard(name)


def test_even_unimodular_signature():
    lattice = even_unimodular(2, 10)
    assert lattice.rank == 12
    assert lattice.signature() == (2, 10)
    assert lattice.is_unimodular


def test_lattice_round_trips_through_its_payload():
    lattice = direct_sum(hyperbolic_plane(), d_lattice(3), name="Λ_5")
    assert Lattice.from_dict(lattice.to_dict()) == lattice
    assert Lattice.from_dict(lattice.to_dict()).name == "Λ_5"


def test_lattice_payload_needs_a_gram():
    with pytest.raises(LatticeError):
        Lattice.from_dict({"name": "U"})


def test_saturation_of_doubled_basis_is_everything():
    d2 = d_lattice(2)
    doubled = Sublattice(d2, [(2, 0), (0, 2)])
    saturated = doubled.saturation()
    assert saturated == Sublattice(d2, [(1, 0), (0, 1)])
    assert doubled.index_in(saturated) == 4
    assert not doubled.is_saturated


def test_saturation_is_idempotent():
    saturated = Sublattice(d_lattice(4), [(2, 0, 0, 0), (0, 2, 2, 0)]).saturation()
    assert saturated.is_saturated
    assert saturated.saturation() == saturated


def test_saturated_sublattice_is_unchanged():
    lattice = direct_sum(hyperbolic_plane(), hyperbolic_plane())
    line = Sublattice(lattice, [(1, 0, 0, 0)])
    assert line.is_saturated
    assert line.saturation() == line


def test_saturation_of_two_hyperelliptic_vectors_is_d2():
    dlattice = make_dlattice(19)
    first = dlattice.vector_from_frame((0, 0, 0, 0), [2] + [0] * 16)
    second = dlattice.vector_from_frame((0, 0, 0, 0), [0, 2] + [0] * 15)
    assert dlattice.classify(first) is VectorKind.hyperelliptic
    assert dlattice.classify(second) is VectorKind.hyperelliptic
    assert dlattice.lattice.pair(first, second) == 0
    omega = Sublattice(dlattice.lattice, [first, second])
    saturated = omega.saturation()
    assert omega.index_in(saturated) == 2
    assert saturated.as_lattice().determinant == 4
    assert root_count(saturated.as_lattice()) == root_count(d_lattice(2))
