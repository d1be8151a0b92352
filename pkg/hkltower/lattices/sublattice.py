"""This module contains the Sublattice class."""
from __future__ import annotations

import logging
from functools import cached_property

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (
    hermite_normal_form,
    invariant_factors,
    smith_normal_decomp,
)

from hkltower.exceptions import LatticeError
from hkltower.lattices.lattice import Lattice

logger = logging.getLogger(__name__)


def _to_domain(rows, width: int) -> DomainMatrix:
    return DomainMatrix(
        [[ZZ(int(entry)) for entry in row] for row in rows], (len(rows), width), ZZ
    )


def _canonical_rows(rows, width: int) -> tuple[tuple[int, ...], ...]:
    """Get the Hermite normal form basis of the span of integer rows."""
    if not rows:
        return ()
    columns = hermite_normal_form(_to_domain(rows, width).transpose())
    return tuple(
        tuple(int(entry) for entry in row) for row in columns.transpose().to_list()
    )


def _unimodular_inverse(matrix: DomainMatrix) -> list[list[int]]:
    inverse = matrix.convert_to(QQ).inv().to_list()
    if any(entry.denominator != 1 for row in inverse for entry in row):
        raise ArithmeticError("ERROR: transform is not unimodular")
    return [[int(entry.numerator) for entry in row] for row in inverse]


class Sublattice:
    """Sublattice class.

    A sublattice of an ambient lattice, given by integer coordinate rows in the
    ambient basis. The rows are linearly independent over Q.

    Attributes
    ----------
    _ambient: Lattice
        The ambient lattice
    _basis: tuple[tuple[int, ...], ...]
        Rows of ambient coordinates

    Methods
    -------
    saturation(self) -> Sublattice
        The sublattice of ambient vectors with a multiple in this one
    contains(self, vector) -> bool
        Whether an ambient vector lies in the sublattice
    index_in(self, other) -> int
        The index in a sublattice of the same rank that contains this one
    as_lattice(self, name) -> Lattice
        The sublattice with its induced form, framed when the ambient is
    """

    def __init__(self, ambient: Lattice, basis) -> None:
        """Store the basis after checking rank and independence.

        Raises
        ------
        LatticeError
            If the rows have the wrong length or are linearly dependent
        """
        self._ambient = ambient
        self._basis = tuple(ambient.check_coords(row) for row in basis)
        if self._basis:
            rank = _to_domain(self._basis, ambient.rank).convert_to(QQ).rank()
            if rank != len(self._basis):
                raise LatticeError("ERROR: sublattice basis is linearly dependent")

    @property
    def ambient(self) -> Lattice:
        """Get the ambient lattice."""
        return self._ambient

    @property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        """Get the basis rows in ambient coordinates."""
        return self._basis

    @property
    def rank(self) -> int:
        """Get the rank."""
        return len(self._basis)

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Get the Gram matrix of the induced form."""
        pairings = [self._ambient.pairings(row) for row in self._basis]
        return tuple(
            tuple(sum(a * b for a, b in zip(left, row)) for row in self._basis)
            for left in pairings
        )

    def as_lattice(self, name: str | None = None) -> Lattice:
        """Get the sublattice as a lattice in its own right."""
        if self._ambient.frame is None:
            return Lattice(self.gram, name=name)
        frame = [self._ambient.frame_vector(row) for row in self._basis]
        return Lattice(
            self.gram, name=name, frame=frame, frame_form=self._ambient.frame_form
        )

    @cached_property
    def _invariants(self) -> tuple[int, ...]:
        if not self._basis:
            return ()
        factors = invariant_factors(_to_domain(self._basis, self._ambient.rank))
        return tuple(abs(int(value)) for value in factors)

    def saturation(self) -> Sublattice:
        """Get the saturation: the ambient vectors with a nonzero multiple here.

        With the Smith decomposition D = S B T of the basis matrix B, the first
        rank rows of T^-1 span the rational span of B intersected with the
        ambient lattice.
        """
        if not self._basis:
            return self
        _, _, right = smith_normal_decomp(_to_domain(self._basis, self._ambient.rank))
        rows = _unimodular_inverse(right)[: self.rank]
        saturated = Sublattice(
            self._ambient, _canonical_rows(rows, self._ambient.rank)
        )
        logger.debug(
            "saturated a rank %d sublattice with index %d",
            self.rank,
            self.index_in(saturated),
        )
        return saturated

    @property
    def is_saturated(self) -> bool:
        """Check whether the sublattice equals its saturation."""
        return all(value == 1 for value in self._invariants)

    def contains(self, vector) -> bool:
        """Check whether an ambient vector lies in the sublattice."""
        coords = self._ambient.check_coords(vector)
        if not any(coords):
            return True
        width = self._ambient.rank
        enlarged = _canonical_rows(list(self._basis) + [coords], width)
        return enlarged == self.canonical_basis

    @cached_property
    def canonical_basis(self) -> tuple[tuple[int, ...], ...]:
        """Get the Hermite normal form basis."""
        return _canonical_rows(self._basis, self._ambient.rank)

    def index_in(self, other: Sublattice) -> int:
        """Get the index of this sublattice in another one of the same rank.

        Raises
        ------
        LatticeError
            If the ranks differ or other does not contain this sublattice
        """
        if other.rank != self.rank or other.ambient != self._ambient:
            raise LatticeError("ERROR: index needs sublattices of the same rank")
        if any(not other.contains(row) for row in self._basis):
            raise LatticeError("ERROR: sublattice is not contained in the other")
        mine = 1
        for value in self._invariants:
            mine *= value
        theirs = 1
        for value in other._invariants:
            theirs *= value
        return mine // theirs

    def __eq__(self, other) -> bool:
        """Compare the spanned modules."""
        if not isinstance(other, Sublattice):
            return NotImplemented
        return (
            self._ambient == other._ambient
            and self.canonical_basis == other.canonical_basis
        )

    def __hash__(self) -> int:
        """Hash the canonical basis."""
        return hash(self.canonical_basis)

    def __repr__(self) -> str:
        """Show the rank and ambient."""
        return f"Sublattice(rank={self.rank}, ambient={self._ambient.name!r})"


def saturation(sublattice: Sublattice) -> Sublattice:
    """Get the saturation of a sublattice in its ambient lattice."""
    return sublattice.saturation()


def orthogonal_complement(ambient: Lattice, sublattice: Sublattice) -> Sublattice:
    """Get the orthogonal complement of a sublattice, which is saturated.

    The complement is the integer kernel of B G. With D = S (B G) T the last
    columns of T beyond the rank span that kernel.
    """
    if sublattice.rank == 0:
        size = ambient.rank
        identity = [[int(i == j) for j in range(size)] for i in range(size)]
        return Sublattice(ambient, identity)
    rows = [ambient.pairings(row) for row in sublattice.basis]
    _, _, right = smith_normal_decomp(_to_domain(rows, ambient.rank))
    columns = right.transpose().to_list()[sublattice.rank :]
    kernel = [[int(entry) for entry in row] for row in columns]
    return Sublattice(ambient, _canonical_rows(kernel, ambient.rank))
