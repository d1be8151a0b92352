import pytest
import sympy

from hkltower.enums.stratum_kind import StratumKind
from hkltower.exceptions import RangeError
from hkltower.predictions.audit import nef_threshold, positivity_audit
from hkltower.predictions.stratum import Stratum
from hkltower.predictions.tower import (
    center_t_values,
    centers,
    contains,
    shift_by_one,
    tower,
)
from hkltower.predictions.walls import (
    flip_case,
    note_for_small_N,
    wall_indices,
    walls,
)
from hkltower.tower_data import wall_denominators


def stratum(kind, m, n=19):
    return Stratum(StratumKind(kind), m, n)


def test_stratum_description_and_t_value():
    inner = stratum("f_then_l", 11)
    assert inner.description() == "Im(f_{11,19}∘l_{11})"
    assert inner.t_value() == 9
    assert inner.dim == 10
    assert stratum("f_path", 19).description() == "F(19)"
    assert stratum("f_path", 19).t_value() is None
    assert stratum("f_path", 12).t_value() == 5
    assert stratum("f_path", 12).is_gritsenko_case


def test_stratum_t_value_at_four_mod_eight():
    assert stratum("f_then_m", 20, 20).t_value() == 1
    assert stratum("f_then_l", 19, 20).t_value() == 4
    assert stratum("f_then_q", 21, 21).t_value() is None


@pytest.mark.parametrize(
    "kind, m, n", [("f_then_l", 12, 19), ("f_path", 10, 19), ("f_path", 11, 14)]
)
def test_stratum_rejects_bad_labels(kind, m, n):
    with pytest.raises(RangeError):
        stratum(kind, m, n)


def test_containment():
    assert contains(stratum("f_path", 15), stratum("f_path", 12))
    assert not contains(stratum("f_path", 12), stratum("f_path", 15))
    assert contains(stratum("f_path", 11), stratum("f_then_l", 11))
    assert contains(stratum("f_then_m", 12), stratum("f_then_l", 11))
    assert contains(stratum("f_then_q", 13), stratum("f_then_l", 11))
    assert contains(stratum("f_then_q", 13), stratum("f_then_m", 12))
    assert not contains(stratum("f_then_l", 19), stratum("f_then_l", 11))


def test_tower_is_ordered_by_t():
    strata = tower(19)
    values = [item.t_value() or 0 for item in strata]
    assert values == sorted(values, reverse=True)
    assert len(strata) == 9 + 2 + 1 + 1


def test_tower_needs_fifteen():
    with pytest.raises(RangeError):
        tower(14)


def test_centers_at_nineteen():
    assert center_t_values(19) == frozenset({1, 2, 3, 4, 5, 6, 7, 9})
    labels = {item.label for item in centers(19)}
    assert (StratumKind.f_then_l, 11) in labels
    assert (StratumKind.f_path, 12) not in labels


@pytest.mark.parametrize("n", range(16, 26))
def test_shift_by_one(n):
    assert shift_by_one(n)


@pytest.mark.parametrize("n, denominators", sorted(wall_denominators.items()))
def test_wall_denominators(n, denominators):
    report = walls(n)
    assert tuple(wall.k for wall in report.walls) == denominators
    assert report.betas == [sympy.Rational(1, k) for k in denominators]


def test_walls_at_nineteen():
    report = walls(19)
    assert [wall.case for wall in report.walls] == [0, 1, 1, 1, 1, 4, 5, 3]
    assert report.walls[-1].description() == "Im(f_{11,19}∘l_{11})"
    assert report.walls[0].description() == "Im f_{18,19} ∪ Im l_{19}"
    assert "Δ^(1)(19)" in report.terminal_contraction()
    assert len(report.to_dict()["walls"]) == 8


@pytest.mark.parametrize("n", range(15, 26))
def test_walls_match_the_centers(n):
    assert [wall.k for wall in walls(n).walls] == wall_indices(n)


def test_wall_cases_at_four_mod_eight():
    assert flip_case(20, 4) == 2
    assert flip_case(20, 2) == 1
    with pytest.raises(RangeError):
        flip_case(19, 8)


def test_note_for_small_n():
    assert "ample" in note_for_small_N(10)
    assert "Hh = 8 λ" in note_for_small_N(10)
    assert "movable" in note_for_small_N(14)
    with pytest.raises(RangeError):
        note_for_small_N(15)


def test_nef_threshold():
    assert nef_threshold(12) == sympy.Rational(1, 4)
    assert nef_threshold(19) == sympy.Rational(1, 9)


@pytest.mark.parametrize("n", range(15, 26))
def test_audit_below_threshold(n):
    threshold = nef_threshold(n)
    for beta in (threshold / 2, threshold * sympy.Rational(9, 10)):
        report = positivity_audit(n, beta)
        assert report.passes
        for row in report.rows:
            assert row.lambda_coeff == 1 - (row.stratum.t_value() or 0) * beta


def test_audit_payload():
    payload = positivity_audit(19, "1/10").to_dict()
    assert payload["beta"] == "1/10"
    assert payload["threshold"] == "1/9"
    assert payload["passes"] is True
    assert len(payload["rows"]) == len(tower(19))


def test_audit_fails_past_the_last_wall():
    report = positivity_audit(19, sympy.Rational(1, 5))
    assert not report.passes
