import pytest
import sympy

from hkltower.borcherds.relations import first_relation
from hkltower.divisors.calculus import (
    TAILS,
    canonical_class,
    closed_form_restriction,
    curve_pairing,
    git_polarization,
    parse_class,
    polarization,
    pullback_delta,
    restrict_polarization,
)
from hkltower.divisors.divisor_class import DivisorClass
from hkltower.divisors.maps import MapLabel, tower_path
from hkltower.divisors.pullback import pullback, pullback_path, pushforward_rho
from hkltower.divisors.space_label import (
    H0,
    HH,
    HN,
    HU,
    HXI,
    LAMBDA,
    SpaceLabel,
)
from hkltower.enums.map_kind import MapKind
from hkltower.exceptions import ClassExpressionError, SpaceMismatchError
from hkltower.settings import BETA_SAMPLE
from hkltower.tower_data import curve_rows, git_curve_pairings

HALF = sympy.Rational(1, 2)
F19 = SpaceLabel.F(19)


def f(n):
    return MapLabel(MapKind.f, n)


def test_parse_class():
    parsed = parse_class("2*lambda - Hh + 1/2 Hu", F19)
    assert parsed == DivisorClass(F19, {LAMBDA: 2, HH: -1, HU: HALF})
    assert parse_class("λ + λ", F19) == DivisorClass(F19, {LAMBDA: 2})


@pytest.mark.parametrize("text", ["", "2**Hh", "3 Hq", "Hh Hn", "1/0 Hh"])
def test_parse_class_rejects_bad_expressions(text):
    with pytest.raises(ClassExpressionError):
        parse_class(text, F19)


def test_parse_class_checks_the_space():
    with pytest.raises(SpaceMismatchError):
        parse_class("Hu", SpaceLabel.F(18))


def test_space_label_parse():
    assert SpaceLabel.parse("F(19)") == F19
    assert SpaceLabel.parse("FIIA1(1)").dimension == 11
    with pytest.raises(SpaceMismatchError):
        SpaceLabel.parse("G(3)")


def test_f_pullback_of_hh():
    image = pullback(f(19), DivisorClass.basis_class(F19, HH))
    assert str(image) == "-2 λ + 1 Hh on F(18)"


@pytest.mark.parametrize(
    "n, expected",
    [
        (19, {HN: 1, HH: 2}),
        (21, {HN: 1, HH: 2, HU: 1}),
    ],
)
def test_f_pullback_of_hn(n, expected):
    image = pullback(f(n), DivisorClass.basis_class(SpaceLabel.F(n), HN))
    assert image == DivisorClass(SpaceLabel.F(n - 1), expected)


def test_f_pullback_of_hu_depends_on_residue():
    assert pullback(f(19), DivisorClass.basis_class(F19, HU)).is_zero
    twenty = SpaceLabel.F(20)
    assert pullback(f(20), DivisorClass.basis_class(twenty, HU)) == DivisorClass(
        F19, {HU: 2}
    )


def test_pullback_needs_the_codomain():
    with pytest.raises(SpaceMismatchError):
        pullback(f(19), DivisorClass.basis_class(SpaceLabel.F(18), HH))


@pytest.mark.parametrize(
    "kind, index", [(MapKind.l, 20), (MapKind.q, 19), (MapKind.f, 3)]
)
def test_maps_need_the_right_residue(kind, index):
    with pytest.raises(SpaceMismatchError):
        MapLabel(kind, index)


def test_map_label_parse():
    assert MapLabel.parse("f_19") == f(19)
    assert MapLabel.parse("rho18").codomain == SpaceLabel.F(18)


def test_unigonal_pullbacks():
    l19 = MapLabel(MapKind.l, 19)
    assert pullback(l19, DivisorClass.basis_class(F19, HU)) == DivisorClass(
        l19.domain, {LAMBDA: -2}
    )
    assert pullback(l19, DivisorClass.basis_class(F19, HH)).is_zero


def test_pushforward_rho():
    stable = SpaceLabel.FStable(20)
    image = pushforward_rho(20, DivisorClass(stable, {LAMBDA: 1, H0: 1, HXI: 1}))
    assert image == DivisorClass(SpaceLabel.F(20), {LAMBDA: 2, HN: 2, HH: 1})
    with pytest.raises(SpaceMismatchError):
        pushforward_rho(19, DivisorClass(SpaceLabel.FStable(19), {LAMBDA: 1}))


@pytest.mark.parametrize("n", range(4, 26))
def test_pullback_delta(n):
    assert pullback_delta(n).coeff(LAMBDA) == -1


def test_canonical_class():
    assert canonical_class(F19) == DivisorClass(
        F19, {LAMBDA: 19, HN: -HALF, HH: -HALF, HU: -HALF}
    )
    with pytest.raises(SpaceMismatchError):
        canonical_class(SpaceLabel.FStable(20))


@pytest.mark.parametrize("curve", sorted(curve_rows))
def test_curves_annihilate_the_relation(curve):
    assert curve_pairing(curve, first_relation(19).as_class()) == 0


@pytest.mark.parametrize("curve, expected", sorted(git_curve_pairings.items()))
def test_curve_pairings_with_git_polarization(curve, expected):
    assert curve_pairing(curve, git_polarization(19)) == expected


def test_git_polarization_at_eighteen_is_doubled():
    assert git_polarization(18) == polarization(18, 1) * 2
    with pytest.raises(SpaceMismatchError):
        git_polarization(20)


def test_restriction_along_two_f_maps():
    path = tower_path(19, 2)
    restricted = restrict_polarization(19, path, sympy.Rational(1, 5))
    assert restricted == DivisorClass(
        SpaceLabel.F(17), {LAMBDA: sympy.Rational(3, 5), HH: sympy.Rational(1, 10)}
    )


def test_restriction_to_the_unigonal_divisor_of_nineteen():
    path = tower_path(19, 8, (MapKind.l,))
    restricted = restrict_polarization(19, path, sympy.Rational(1, 9))
    assert restricted.is_zero
    assert pullback_path(path, polarization(19, 0)).coeff(LAMBDA) == 1


def test_polarization_rejects_beta_outside_unit_interval():
    with pytest.raises(ValueError):
        polarization(19, 2)


def _paths(n):
    for depth in range(4):
        for tail in TAILS:
            if depth + len(tail) > 3:
                continue
            try:
                yield tower_path(n, depth, tail)
            except SpaceMismatchError:
                continue


@pytest.mark.slow
@pytest.mark.parametrize("n", range(11, 26))
def test_restriction_closed_forms(n):
    for path in _paths(n):
        for beta in BETA_SAMPLE:
            assert restrict_polarization(n, path, beta) == closed_form_restriction(
                n, path, beta
            )


@pytest.mark.parametrize(
    "divisor",
    [
        DivisorClass(F19, {LAMBDA: 19, HN: -HALF, HH: -HALF, HU: -HALF}),
        DivisorClass(SpaceLabel.F(18), {LAMBDA: -2, HH: 1}),
        DivisorClass(SpaceLabel.FStable(20), {LAMBDA: 1, H0: 1, HXI: 1}),
        DivisorClass.zero(F19),
    ],
)
def test_class_round_trips_through_its_payload(divisor):
    assert DivisorClass.from_dict(divisor.to_dict()) == divisor
