"""This module contains the Relation class."""
from __future__ import annotations

import sympy

from hkltower.dict_structures.relation_dict import RelationDict
from hkltower.divisors.divisor_class import DivisorClass
from hkltower.divisors.space_label import HH, HN, HU, LAMBDA, SYMBOLS, SpaceLabel
from hkltower.enums.group_kind import GroupKind
from hkltower.enums.provenance import Provenance
from hkltower.exceptions import SpaceMismatchError
from hkltower.rationals import as_rational, format_rational


class Relation:
    """Relation class.

    A linear relation lhs·λ = Σ c_H H between the Hodge class and Heegner
    divisors of a space.

    Attributes
    ----------
    _n: int
        N
    _space: SpaceLabel
        F(N) for the decorated group, FStable(N) for the stable one
    _group: GroupKind
        The arithmetic group
    _provenance: Provenance
        Which quasi-pullback the relation comes from
    _lhs: sympy.Rational
        The coefficient of λ on the left
    _coeffs: dict[str, sympy.Rational]
        Nonzero Heegner coefficients on the right

    Methods
    -------
    as_class(self) -> DivisorClass
        The class Σ c_H H - lhs·λ, which is zero
    solve_for(self, key) -> DivisorClass
        The basis class key written through the others
    to_dict(self) -> RelationDict
        Serialize for the JSON output
    from_dict(cls, payload) -> Relation
        Rebuild a relation from the JSON output
    """

    def __init__(
        self,
        n: int,
        space: SpaceLabel,
        group: GroupKind,
        provenance: Provenance,
        lhs,
        coeffs,
    ) -> None:
        """Store the two sides of the relation.

        Raises
        ------
        SpaceMismatchError
            If a right hand key is λ or is not a class on the space
        """
        self._n = n
        self._space = space
        self._group = GroupKind(group)
        self._provenance = Provenance(provenance)
        self._lhs = as_rational(lhs)
        if LAMBDA in coeffs:
            raise SpaceMismatchError("ERROR: λ belongs on the left of a relation")
        self._coeffs = DivisorClass(space, coeffs).coeffs

    @classmethod
    def from_class(
        cls,
        n: int,
        group: GroupKind,
        provenance: Provenance,
        divisor: DivisorClass,
    ) -> Relation:
        """Read a relation off a class that is zero: lhs is minus its λ part."""
        return cls(
            n,
            divisor.space,
            group,
            provenance,
            -divisor.coeff(LAMBDA),
            divisor.without(LAMBDA).coeffs,
        )

    @property
    def n(self) -> int:
        """Get N."""
        return self._n

    @property
    def space(self) -> SpaceLabel:
        """Get the space."""
        return self._space

    @property
    def group(self) -> GroupKind:
        """Get the group."""
        return self._group

    @property
    def provenance(self) -> Provenance:
        """Get the provenance."""
        return self._provenance

    @property
    def lhs(self) -> sympy.Rational:
        """Get the coefficient of λ."""
        return self._lhs

    @property
    def coeffs(self) -> dict[str, sympy.Rational]:
        """Get a copy of the Heegner coefficients."""
        return dict(self._coeffs)

    def coeff(self, key: str) -> sympy.Rational:
        """Get the coefficient of one Heegner class."""
        return DivisorClass(self._space, self._coeffs).coeff(key)

    def as_class(self) -> DivisorClass:
        """Get Σ c_H H - lhs·λ."""
        return DivisorClass(self._space, {LAMBDA: -self._lhs, **self._coeffs})

    def solve_for(self, key: str) -> DivisorClass:
        """Express one Heegner class through λ and the other classes.

        Raises
        ------
        SpaceMismatchError
            If the class does not occur in the relation
        """
        value = self.coeff(key)
        if value == 0:
            raise SpaceMismatchError(
                f"ERROR: {SYMBOLS[key]} does not occur in the relation at N={self._n}"
            )
        return -(self.as_class().without(key)) * (1 / value)

    def render_solved(self, key: str) -> str:
        """Render solve_for as e.g. "Hh = 2 λ + 2 Hu"."""
        return f"{SYMBOLS[key]} = {self.solve_for(key).terms()}"

    def to_dict(self) -> RelationDict:
        """Serialize with "p/q" coefficients."""
        payload = {
            "N": self._n,
            "group": self._group.value,
            "provenance": self._provenance.value,
            "lambda_coeff": format_rational(self._lhs),
        }
        keys = [key for key in self._space.basis if key != LAMBDA]
        if self._group is GroupKind.decorated:
            keys = [HN, HH, HU]
        for key in keys:
            payload[key] = format_rational(self._coeffs.get(key, 0))
        return payload

    @classmethod
    def from_dict(cls, payload: RelationDict) -> Relation:
        """Rebuild a relation from its JSON payload.

        Zero coefficients are dropped, so "Hu": "0" is accepted on an F(N)
        without unigonal divisor.

        Raises
        ------
        SpaceMismatchError
            If a field is missing or a key is not a class on the space
        """
        fixed = ("N", "group", "provenance", "lambda_coeff")
        try:
            n = int(payload["N"])
            group = GroupKind(payload["group"])
            provenance = Provenance(payload["provenance"])
            lhs = payload["lambda_coeff"]
        except (KeyError, ValueError) as error:
            raise SpaceMismatchError(
                f"ERROR: malformed relation payload: {error}"
            ) from error
        if group is GroupKind.decorated:
            space = SpaceLabel.F(n)
        else:
            space = SpaceLabel.FStable(n)
        coeffs = {}
        for key, value in payload.items():
            if key in fixed:
                continue
            rational = as_rational(value)
            if rational != 0:
                coeffs[key] = rational
        return cls(n, space, group, provenance, lhs, coeffs)

    def __eq__(self, other) -> bool:
        """Compare every field."""
        if not isinstance(other, Relation):
            return NotImplemented
        return (
            self._n == other._n
            and self._space == other._space
            and self._group is other._group
            and self._provenance is other._provenance
            and self._lhs == other._lhs
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        """Hash the relation as a class."""
        return hash((self._provenance, self.as_class()))

    def __str__(self) -> str:
        """Render as "108 λ = 1 Hn + 14 Hh + 78 Hu"."""
        right = DivisorClass(self._space, self._coeffs).terms()
        return f"{format_rational(self._lhs)} {SYMBOLS[LAMBDA]} = {right}"

    def __repr__(self) -> str:
        """Show the provenance and the relation."""
        return f"Relation({self._provenance.value}, {self} on {self._space})"
