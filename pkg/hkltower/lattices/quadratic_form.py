"""This module contains the FiniteQuadraticForm class.

It also holds the discriminant group of a lattice and the divisibility and
discriminant class of a lattice vector.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from functools import cached_property
from math import gcd

import sympy
from sympy import QQ
from sympy.polys.matrices.normalforms import smith_normal_decomp

from hkltower.exceptions import NotPrimitiveError, ZeroVectorError
from hkltower.lattices.lattice import Lattice
from hkltower.rationals import as_rational, to_qq

logger = logging.getLogger(__name__)


def _mod(value, modulus: int) -> sympy.Rational:
    """Reduce an exact rational into [0, modulus)."""
    rational = as_rational(value)
    return rational - modulus * sympy.floor(rational / modulus)


class FiniteQuadraticForm:
    """FiniteQuadraticForm class.

    A finite abelian group Z/d_1 + ... + Z/d_r with a Q/2Z valued quadratic
    form. Elements are tuples of residues. The form is determined by the values
    q(g_i) mod 2 on the generators and the pairings b(g_i, g_j) mod 1.

    Attributes
    ----------
    _orders: tuple[int, ...]
        The orders d_i of the cyclic factors
    _q_generators: tuple[sympy.Rational, ...]
        q(g_i) in [0, 2)
    _b_generators: tuple[tuple[sympy.Rational, ...], ...]
        b(g_i, g_j) in [0, 1)
    _projection: tuple[tuple[int, ...], ...] | None
        For a discriminant group, the rows mapping a pairing vector to residues

    Methods
    -------
    q(self, element) -> sympy.Rational
        The quadratic form in [0, 2)
    b(self, first, second) -> sympy.Rational
        The bilinear form in [0, 1)
    elements(self) -> list[tuple[int, ...]]
        Every element in lexicographic order
    element_of_pairings(self, pairings) -> tuple[int, ...]
        The class of a dual vector given by its pairings with the basis
    is_isomorphic(self, other) -> bool
        Compare the multisets of (element order, q value)
    """

    def __init__(
        self,
        orders,
        q_generators,
        b_generators,
        projection=None,
        lifts=None,
    ) -> None:
        """Store the generator data of a finite quadratic form.

        Parameters
        ----------
        orders: sequence of int
            Orders of the cyclic factors, each at least 2
        q_generators: sequence of rationals
            q of each generator, reduced mod 2
        b_generators: sequence of sequences of rationals
            Pairings of the generators, reduced mod 1
        projection: sequence of sequences of int | None
            Rows of the map from pairing vectors to residues
        lifts: sequence of sequences of int | None
            A pairing vector lifting each generator
        """
        self._orders = tuple(int(order) for order in orders)
        if any(order < 2 for order in self._orders):
            raise ValueError("ERROR: cyclic factor orders must be at least 2")
        self._q_generators = tuple(_mod(value, 2) for value in q_generators)
        self._b_generators = tuple(
            tuple(_mod(value, 1) for value in row) for row in b_generators
        )
        self._projection = None if projection is None else tuple(map(tuple, projection))
        self._lifts = None if lifts is None else tuple(map(tuple, lifts))

    @property
    def orders(self) -> tuple[int, ...]:
        """Get the orders of the cyclic factors."""
        return self._orders

    @property
    def order(self) -> int:
        """Get the order of the group."""
        result = 1
        for value in self._orders:
            result *= value
        return result

    @property
    def zero(self) -> tuple[int, ...]:
        """Get the identity element."""
        return (0,) * len(self._orders)

    @property
    def lifts(self) -> tuple[tuple[int, ...], ...] | None:
        """Get the pairing vectors lifting the generators, if known."""
        return self._lifts

    def reduce(self, element) -> tuple[int, ...]:
        """Reduce residues into their canonical range."""
        values = tuple(int(value) for value in element)
        if len(values) != len(self._orders):
            raise ValueError("ERROR: element has the wrong number of residues")
        return tuple(value % order for value, order in zip(values, self._orders))

    def add(self, first, second) -> tuple[int, ...]:
        """Add two elements."""
        return self.reduce(a + b for a, b in zip(first, second))

    def neg(self, element) -> tuple[int, ...]:
        """Negate an element."""
        return self.reduce(-a for a in element)

    def scale(self, element, n: int) -> tuple[int, ...]:
        """Multiply an element by an integer."""
        return self.reduce(n * a for a in element)

    def element_order(self, element) -> int:
        """Get the order of an element."""
        result = 1
        for value, order in zip(self.reduce(element), self._orders):
            part = order // gcd(value, order)
            result = result * part // gcd(result, part)
        return result

    def q(self, element) -> sympy.Rational:
        """Get q(element) in [0, 2)."""
        values = self.reduce(element)
        total = sympy.Integer(0)
        for i, a in enumerate(values):
            if not a:
                continue
            total += a * a * self._q_generators[i]
            for j in range(i + 1, len(values)):
                if values[j]:
                    total += 2 * a * values[j] * self._b_generators[i][j]
        return _mod(total, 2)

    def b(self, first, second) -> sympy.Rational:
        """Get b(first, second) in [0, 1)."""
        x = self.reduce(first)
        y = self.reduce(second)
        total = sympy.Integer(0)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, c in enumerate(y):
                if c:
                    total += a * c * self._b_generators[i][j]
        return _mod(total, 1)

    def elements(self) -> list[tuple[int, ...]]:
        """List every element in lexicographic order."""
        return list(itertools.product(*(range(order) for order in self._orders)))

    def elements_with_q(self, value) -> list[tuple[int, ...]]:
        """List the elements whose q equals value mod 2."""
        target = _mod(value, 2)
        return [element for element in self.elements() if self.q(element) == target]

    def element_of_pairings(self, pairings) -> tuple[int, ...]:
        """Get the class of the dual vector with the given pairings.

        Parameters
        ----------
        pairings: sequence of int
            Pairings of a vector of the dual lattice with the basis

        Returns
        -------
        element: tuple[int, ...]
            Residues in the invariant factor coordinates

        Raises
        ------
        ValueError
            If the form was not built from a lattice
        """
        if self._projection is None:
            raise ValueError("ERROR: this form has no lattice projection")
        values = tuple(int(value) for value in pairings)
        return self.reduce(
            sum(entry * value for entry, value in zip(row, values))
            for row in self._projection
        )

    @cached_property
    def _fingerprint(self) -> Counter:
        return Counter(
            (self.element_order(element), self.q(element))
            for element in self.elements()
        )

    def is_isomorphic(self, other: FiniteQuadraticForm) -> bool:
        """Compare the multisets of (element order, q value).

        The multiset of element orders fixes the group, and together with the
        q values it separates the forms that occur for D-lattices.
        """
        return self.order == other.order and self._fingerprint == other._fingerprint

    def __repr__(self) -> str:
        """Show the cyclic factor orders."""
        return f"FiniteQuadraticForm(orders={self._orders})"


def discriminant_group(lattice: Lattice) -> FiniteQuadraticForm:
    """Compute the discriminant form of an even lattice.

    The Smith decomposition D = S G T of the Gram matrix G gives
    Hom(L, Z) / L = Z^n / G Z^n, with a pairing vector c sent to the residues
    of S c modulo the nontrivial invariant factors. The generator of the i-th
    factor lifts to S^-1 e_i and q(c) = c^T G^-1 c mod 2.

    Parameters
    ----------
    lattice: Lattice
        An even nondegenerate lattice

    Returns
    -------
    form: FiniteQuadraticForm
        The discriminant form, of order |det G|
    """
    diagonal, left, _ = smith_normal_decomp(lattice.matrix)
    diagonal_rows = diagonal.to_list()
    invariants = [abs(int(diagonal_rows[i][i])) for i in range(lattice.rank)]
    logger.debug("invariant factors of %s: %s", lattice.name, invariants)
    factors = [i for i, value in enumerate(invariants) if value > 1]
    left_rows = [[int(entry) for entry in row] for row in left.to_list()]
    left_inverse = left.convert_to(QQ).inv().to_list()
    lifts = []
    for i in factors:
        column = [left_inverse[k][i] for k in range(lattice.rank)]
        if any(entry.denominator != 1 for entry in column):
            raise ArithmeticError("ERROR: Smith transform is not unimodular")
        lifts.append(tuple(int(entry.numerator) for entry in column))
    inverse = lattice.inverse

    def _pair(x, y):
        return sum(
            (
                to_qq(x[a]) * inverse[a][b] * y[b]
                for a in range(lattice.rank)
                if x[a]
                for b in range(lattice.rank)
                if y[b]
            ),
            QQ(0),
        )

    def _rational(value) -> sympy.Rational:
        return sympy.Rational(int(value.numerator), int(value.denominator))

    q_generators = [_rational(_pair(lift, lift)) for lift in lifts]
    b_generators = [[_rational(_pair(x, y)) for y in lifts] for x in lifts]
    form = FiniteQuadraticForm(
        [invariants[i] for i in factors],
        q_generators,
        b_generators,
        projection=[left_rows[i] for i in factors],
        lifts=lifts,
    )
    if form.order != abs(lattice.determinant):
        raise ArithmeticError("ERROR: discriminant group order differs from det")
    return form


def divisibility(lattice: Lattice, vector) -> int:
    """Get the positive generator of (v, L).

    Raises
    ------
    ZeroVectorError
        If v is zero
    """
    pairings = lattice.pairings(vector)
    if not any(lattice.check_coords(vector)):
        raise ZeroVectorError("ERROR: the zero vector has no divisibility")
    return gcd(*pairings)


def disc_class(
    lattice: Lattice, vector, form: FiniteQuadraticForm | None = None
) -> tuple[int, ...]:
    """Get the class of v / div(v) in the discriminant group.

    Parameters
    ----------
    lattice: Lattice
        The lattice
    vector: LatticeVector | sequence of int
        A primitive vector
    form: FiniteQuadraticForm | None
        The discriminant form of lattice, computed when not given

    Returns
    -------
    element: tuple[int, ...]
        Residues in the invariant factor coordinates of the form

    Raises
    ------
    NotPrimitiveError
        If the coordinates have a common factor
    """
    coords = lattice.check_coords(vector)
    if gcd(*coords) != 1:
        raise NotPrimitiveError("ERROR: vector not primitive")
    if form is None:
        form = discriminant_group(lattice)
    div = divisibility(lattice, coords)
    return form.element_of_pairings(value // div for value in lattice.pairings(coords))
