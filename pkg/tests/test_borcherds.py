import pytest
import sympy

from hkltower.borcherds.admissibility import admissible_decorations
from hkltower.borcherds.compatibility import (
    check_compatibility,
    compatibility_defect,
)
from hkltower.borcherds.embedding import embed_complement
from hkltower.borcherds.heegner import (
    closed_form_weight,
    heegner_coefficients,
    heegner_report,
    quasi_pullback_weight,
)
from hkltower.borcherds.relation import Relation
from hkltower.borcherds.relations import (
    first_relation,
    gritsenko_relation,
    mu_table,
    relation,
    second_relation,
    stable_relation,
)
from hkltower.divisors.space_label import HH, HN, HU, LAMBDA, SpaceLabel
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.embedding_variant import EmbeddingVariant
from hkltower.enums.group_kind import GroupKind
from hkltower.enums.provenance import Provenance
from hkltower.exceptions import RangeError, SpaceMismatchError
from hkltower.tower_data import mu_table as reference_mu_table

D = EmbeddingVariant.D
E8D = EmbeddingVariant.E8D


@pytest.mark.parametrize(
    "n, variant, expected", [(19, D, 54), (25, D, 12), (17, E8D, 132)]
)
def test_quasi_pullback_weight(n, variant, expected):
    assert closed_form_weight(n, variant) == expected
    assert quasi_pullback_weight(embed_complement(n, variant)) == expected


def test_heegner_coefficients_at_nineteen():
    embedding = embed_complement(19, D)
    assert heegner_coefficients(embedding) == {
        DiscLabel.zero: 1,
        DiscLabel.xi: 14,
        DiscLabel.zeta: 78,
        DiscLabel.zeta_prime: 78,
    }
    assert heegner_report(embedding)["matches"]


def test_zeta_coefficient_vanishes_without_minimal_vector():
    coefficients = heegner_coefficients(embed_complement(18, D))
    assert coefficients[DiscLabel.zeta] == 0
    assert coefficients[DiscLabel.xi] == 16


@pytest.mark.slow
def test_mu_table():
    assert mu_table() == reference_mu_table


def test_first_relation_at_nineteen():
    found = first_relation(19)
    assert str(found) == "108 λ = 1 Hn + 14 Hh + 78 Hu"
    assert found.space == SpaceLabel.F(19)
    assert found.to_dict() == {
        "N": 19,
        "group": "decorated",
        "provenance": "first",
        "lambda_coeff": "108",
        "Hn": "1",
        "Hh": "14",
        "Hu": "78",
    }


def test_second_relation_at_seventeen():
    assert str(second_relation(17)) == "264 λ = 1 Hn + 2 Hh + 2 Hu"


def test_second_relation_range():
    with pytest.raises(RangeError):
        second_relation(18)


def test_stable_relation_lives_on_the_double_cover():
    found = stable_relation(20)
    assert found.space == SpaceLabel.FStable(20)
    assert found.group is GroupKind.stable


@pytest.mark.parametrize("n", range(4, 11))
def test_gritsenko_gives_multiple_of_lambda(n):
    solved = gritsenko_relation(n).solve_for(HH)
    assert solved.coeffs == {LAMBDA: 2 * (14 - n)}


@pytest.mark.parametrize(
    "n, text",
    [(10, "Hh = 8 λ"), (14, "Hh = 1 Hu"), (13, "Hh = 2 λ + 2 Hu")],
)
def test_gritsenko_solved_forms(n, text):
    assert gritsenko_relation(n).render_solved(HH) == text


def test_gritsenko_has_no_stable_form():
    with pytest.raises(RangeError):
        relation(10, Provenance.gritsenko, GroupKind.stable)


def test_relation_by_provenance():
    assert relation(19, Provenance.first) == first_relation(19)


def test_relation_rejects_lambda_on_the_right():
    with pytest.raises(SpaceMismatchError):
        Relation(
            19,
            SpaceLabel.F(19),
            GroupKind.decorated,
            Provenance.first,
            108,
            {LAMBDA: 1},
        )


def test_solve_for_missing_class():
    with pytest.raises(SpaceMismatchError):
        gritsenko_relation(10).solve_for(HN)


def test_relation_round_trips_through_its_class():
    found = first_relation(19)
    again = Relation.from_class(
        19, GroupKind.decorated, Provenance.first, found.as_class()
    )
    assert again == found
    assert found.solve_for(HN).coeff(HU) == -78
    assert found.solve_for(HN).coeff(LAMBDA) == sympy.Integer(108)


@pytest.mark.parametrize("n", [n for n in range(5, 26) if n % 8 in (3, 4, 5)])
def test_compatibility(n):
    assert check_compatibility(n)
    assert compatibility_defect(n).is_zero


def test_admissible_decorations():
    assert admissible_decorations(embed_complement(14, D)) == frozenset(
        {DiscLabel.xi}
    )
    assert admissible_decorations(embed_complement(22, D)) == frozenset(
        {DiscLabel.xi, DiscLabel.zeta, DiscLabel.zeta_prime}
    )


def test_first_relation_with_zeta_decoration():
    assert str(first_relation(14, DiscLabel.zeta)) == "288 λ = 1 Hn + 24 Hu"


@pytest.mark.parametrize(
    "n, decoration",
    [
        (12, DiscLabel.zeta),
        (18, DiscLabel.zeta),
        (20, DiscLabel.zeta),
        (20, DiscLabel.zeta_prime),
        (19, DiscLabel.zeta),
        (14, DiscLabel.zero),
    ],
)
def test_first_relation_rejects_unused_decorations(n, decoration):
    with pytest.raises(RangeError):
        first_relation(n, decoration)


@pytest.mark.parametrize(
    "n, which, group, decoration",
    [
        (19, Provenance.first, GroupKind.decorated, DiscLabel.xi),
        (18, Provenance.first, GroupKind.decorated, DiscLabel.xi),
        (14, Provenance.first, GroupKind.decorated, DiscLabel.zeta),
        (10, Provenance.gritsenko, GroupKind.decorated, DiscLabel.xi),
        (20, Provenance.first, GroupKind.stable, DiscLabel.xi),
    ],
)
def test_relation_round_trips_through_its_payload(n, which, group, decoration):
    found = relation(n, which, group, decoration)
    assert Relation.from_dict(found.to_dict()) == found


def test_relation_payload_needs_its_fields():
    with pytest.raises(SpaceMismatchError):
        Relation.from_dict({"N": 19, "group": "decorated"})
