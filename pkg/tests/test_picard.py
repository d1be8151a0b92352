import pytest
import sympy

from hkltower.dtower.decorated_lattice import DecoratedDLattice
from hkltower.picard.cyclotomic import Cyclotomic8
from hkltower.picard.gauss import check_milgram, gauss_sum, milgram_value
from hkltower.picard.rank import closed_form_rank, picard_rank, rank_report
from hkltower.picard.root_two import RootTwo
from hkltower.tower_data import rank_table


@pytest.mark.parametrize("n, expected", sorted(rank_table.items()))
def test_picard_rank(n, expected):
    assert picard_rank(n) == expected


@pytest.mark.parametrize("n", range(3, 41))
def test_closed_form_agrees_with_table(n):
    if n in rank_table:
        assert closed_form_rank(n) == rank_table[n]
    assert closed_form_rank(n) >= 1


def test_rank_report_at_nineteen():
    report = rank_report(19)
    assert report.matches
    payload = report.to_dict()
    assert payload["N"] == 19
    assert payload["d"] == 3
    assert payload["rank"] == 3
    assert payload["closed_form_rank"] == 3


@pytest.mark.parametrize("n", range(3, 26))
def test_milgram(n):
    dlattice = DecoratedDLattice(n)
    assert check_milgram(dlattice) == milgram_value(n)


def test_gauss_sum_of_other_index_is_exact():
    value = gauss_sum(DecoratedDLattice(19), 2)
    assert isinstance(value, Cyclotomic8)


def test_zeta_has_order_eight():
    zeta = Cyclotomic8.zeta_power(1)
    assert zeta**8 == Cyclotomic8((1, 0, 0, 0))
    assert zeta**4 == Cyclotomic8((-1, 0, 0, 0))
    assert zeta.conjugate() == Cyclotomic8.zeta_power(7)


def test_root_two_arithmetic():
    root = RootTwo(0, 1)
    assert root * root == RootTwo(2, 0)
    assert (RootTwo(1, 1) + RootTwo(sympy.Rational(1, 2), -1)).is_rational
