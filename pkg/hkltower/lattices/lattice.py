"""This module contains the Lattice class."""
from __future__ import annotations

import logging
from functools import cached_property
from math import gcd

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from hkltower.dict_structures.lattice_dict import LatticeDict
from hkltower.exceptions import DegenerateLatticeError, LatticeError
from hkltower.rationals import to_qq

logger = logging.getLogger(__name__)


def _int_rows(gram) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(entry) for entry in row) for row in gram)
    if not rows or any(len(row) != len(rows) for row in rows):
        raise LatticeError("ERROR: Gram matrix must be a nonempty square matrix")
    for row, original in zip(rows, gram):
        if any(entry != value for entry, value in zip(row, original)):
            raise LatticeError("ERROR: Gram matrix entries must be integers")
    return rows


def _sparse(form) -> tuple[tuple[int, int, int], ...]:
    return tuple(
        (i, j, value)
        for i, row in enumerate(form)
        for j, value in enumerate(row)
        if value
    )


def _inertia(rows) -> tuple[int, int, int]:
    """Count positive, negative and zero pivots by symmetric elimination."""
    matrix = [[to_qq(entry) for entry in row] for row in rows]
    positive = negative = 0
    while matrix:
        size = len(matrix)
        pivot = next((i for i in range(size) if matrix[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in range(size) for j in range(size) if matrix[i][j]),
                None,
            )
            if pair is None:
                return positive, negative, size
            i, j = pair
            # add row and column j to i, the new diagonal entry is 2*a_ij
            for k in range(size):
                matrix[i][k] += matrix[j][k]
            for k in range(size):
                matrix[k][i] += matrix[k][j]
            continue
        value = matrix[pivot][pivot]
        if value > 0:
            positive += 1
        else:
            negative += 1
        rest = [k for k in range(size) if k != pivot]
        matrix = [
            [
                matrix[a][b] - matrix[a][pivot] * matrix[pivot][b] / value
                for b in rest
            ]
            for a in rest
        ]
    return positive, negative, 0


class Lattice:
    """Lattice class.

    An even nondegenerate lattice given by an exact integer Gram matrix. A
    lattice may carry a frame: rational coordinates of its basis in an ambient
    coordinate space whose form is the integer matrix ``frame_form``, with
    F J F^T equal to the Gram matrix. Frames let vectors be written in the usual
    Euclidean or hyperbolic coordinates.

    Attributes
    ----------
    _gram: tuple[tuple[int, ...], ...]
        The Gram matrix in the lattice basis
    _name: str | None
        Optional label such as "D_7" or "II_{2,26}"
    _frame: tuple[tuple, ...] | None
        Rows of rational frame coordinates, one per basis vector
    _frame_form: tuple[tuple[int, ...], ...] | None
        The form of the frame coordinate space

    Methods
    -------
    pair(self, x, y) -> int
        The bilinear form on two coordinate vectors
    square(self, x) -> int
        The quadratic form on a coordinate vector
    pairings(self, x) -> tuple[int, ...]
        The pairings of a coordinate vector with the basis
    signature(self) -> tuple[int, int]
        The numbers of positive and negative eigenvalues
    frame_vector(self, coords) -> tuple
        Frame coordinates of a lattice vector
    coords_from_frame(self, vector) -> tuple[int, ...]
        Lattice coordinates of a vector given in frame coordinates
    pairings_of_frame(self, vector) -> tuple
        Pairings of a frame coordinate vector with the basis
    vector(self, coords) -> LatticeVector
        Wrap coordinates as a LatticeVector of this lattice
    to_dict(self) -> LatticeDict
        Serialize as {name, gram}
    from_dict(cls, payload) -> Lattice
        Rebuild from {name, gram}
    """

    def __init__(
        self,
        gram,
        name: str | None = None,
        frame=None,
        frame_form=None,
    ) -> None:
        """Validate and store a Gram matrix.

        Parameters
        ----------
        gram: sequence of sequences of int
            Symmetric integer matrix with even diagonal
        name: str | None
            Optional label
        frame: sequence of sequences of rationals | None
            Frame coordinates of the basis vectors
        frame_form: sequence of sequences of int | None
            Form of the frame coordinate space, required with frame

        Raises
        ------
        LatticeError
            If the matrix is not square, not symmetric, not even, or the frame
            does not reproduce the Gram matrix
        DegenerateLatticeError
            If the determinant vanishes
        """
        rows = _int_rows(gram)
        size = len(rows)
        for i in range(size):
            if rows[i][i] % 2:
                raise LatticeError(
                    f"ERROR: odd diagonal entry {rows[i][i]}, lattice is not even"
                )
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise LatticeError("ERROR: Gram matrix is not symmetric")
        self._gram = rows
        self._name = name
        if self.determinant == 0:
            raise DegenerateLatticeError("ERROR: degenerate lattice")
        self._frame = None
        self._frame_form = None
        self._form_entries = ()
        if frame is not None:
            self._set_frame(frame, frame_form)

    def _set_frame(self, frame, frame_form) -> None:
        if frame_form is None:
            raise LatticeError("ERROR: a frame needs its frame form")
        rows = tuple(tuple(to_qq(entry) for entry in row) for row in frame)
        form = _int_rows(frame_form)
        entries = _sparse(form)
        if len(rows) != self.rank or any(len(row) != len(form) for row in rows):
            raise LatticeError("ERROR: frame shape does not match the lattice")
        for i in range(self.rank):
            for j in range(self.rank):
                if self._frame_pair(rows[i], rows[j], entries) != self._gram[i][j]:
                    raise LatticeError(
                        "ERROR: frame does not reproduce the Gram matrix"
                    )
        self._frame = rows
        self._frame_form = form
        self._form_entries = entries

    @staticmethod
    def _frame_pair(x, y, entries) -> QQ:
        total = QQ(0)
        for i, j, value in entries:
            if x[i] and y[j]:
                total += x[i] * value * y[j]
        return total

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Get the Gram matrix."""
        return self._gram

    @property
    def name(self) -> str | None:
        """Get the lattice label."""
        return self._name

    @property
    def rank(self) -> int:
        """Get the rank."""
        return len(self._gram)

    @property
    def frame(self) -> tuple[tuple, ...] | None:
        """Get the frame coordinates of the basis, if any."""
        return self._frame

    @property
    def frame_form(self) -> tuple[tuple[int, ...], ...] | None:
        """Get the form of the frame coordinate space, if any."""
        return self._frame_form

    @cached_property
    def matrix(self) -> DomainMatrix:
        """Get the Gram matrix as a DomainMatrix over ZZ."""
        return DomainMatrix(
            [[ZZ(entry) for entry in row] for row in self._gram],
            (self.rank, self.rank),
            ZZ,
        )

    @cached_property
    def inverse(self) -> tuple[tuple, ...]:
        """Get the exact inverse Gram matrix as rows of QQ elements."""
        inverse = self.matrix.convert_to(QQ).inv()
        return tuple(tuple(row) for row in inverse.to_list())

    @cached_property
    def determinant(self) -> int:
        """Get the determinant of the Gram matrix."""
        return int(self.matrix.det())

    def signature(self) -> tuple[int, int]:
        """Get the signature as (positive, negative)."""
        positive, negative, _ = _inertia(self._gram)
        return positive, negative

    @property
    def is_definite(self) -> bool:
        """Check whether the form is positive or negative definite."""
        positive, negative = self.signature()
        return positive == 0 or negative == 0

    @property
    def is_negative_definite(self) -> bool:
        """Check whether the form is negative definite."""
        return self.signature()[0] == 0

    @property
    def is_unimodular(self) -> bool:
        """Check whether the determinant is a unit."""
        return abs(self.determinant) == 1

    def check_coords(self, x) -> tuple[int, ...]:
        """Validate a coordinate vector of this lattice.

        Parameters
        ----------
        x: LatticeVector | sequence of int
            The vector

        Returns
        -------
        coords: tuple[int, ...]
            The integer coordinates

        Raises
        ------
        LatticeError
            If the length does not match the rank
        """
        coords = tuple(int(entry) for entry in getattr(x, "coords", x))
        if len(coords) != self.rank:
            raise LatticeError(
                f"ERROR: vector of length {len(coords)} in a rank {self.rank} lattice"
            )
        return coords

    def pairings(self, x) -> tuple[int, ...]:
        """Get the pairings of x with every basis vector."""
        coords = self.check_coords(x)
        return tuple(
            sum(entry * value for entry, value in zip(row, coords) if value)
            for row in self._gram
        )

    def pair(self, x, y) -> int:
        """Get the bilinear form (x, y)."""
        return sum(a * b for a, b in zip(self.pairings(x), self.check_coords(y)))

    def square(self, x) -> int:
        """Get x squared."""
        return self.pair(x, x)

    def _require_frame(self) -> None:
        if self._frame is None:
            raise LatticeError(f"ERROR: lattice {self._name} has no frame")

    def frame_vector(self, coords) -> tuple:
        """Get the frame coordinates of a lattice vector."""
        return self.frame_combination(self.check_coords(coords))

    def frame_combination(self, coefficients) -> tuple:
        """Get the frame coordinates of a rational combination of the basis."""
        self._require_frame()
        values = tuple(to_qq(entry) for entry in coefficients)
        if len(values) != self.rank:
            raise LatticeError("ERROR: wrong number of coefficients")
        width = len(self._frame_form)
        return tuple(
            sum(
                (values[i] * self._frame[i][k] for i in range(self.rank) if values[i]),
                QQ(0),
            )
            for k in range(width)
        )

    def pairings_of_frame(self, vector) -> tuple:
        """Get the pairings of a frame coordinate vector with every basis vector.

        Parameters
        ----------
        vector: sequence of rationals
            Frame coordinates, not necessarily of a lattice vector

        Returns
        -------
        pairings: tuple
            One QQ element per basis vector
        """
        self._require_frame()
        values = tuple(to_qq(entry) for entry in vector)
        if len(values) != len(self._frame_form):
            raise LatticeError("ERROR: frame vector has the wrong length")
        return tuple(
            self._frame_pair(row, values, self._form_entries) for row in self._frame
        )

    def coords_from_frame(self, vector) -> tuple[int, ...]:
        """Get lattice coordinates of a vector given in frame coordinates.

        Parameters
        ----------
        vector: sequence of rationals
            Frame coordinates

        Returns
        -------
        coords: tuple[int, ...]
            Integer coordinates in the lattice basis

        Raises
        ------
        LatticeError
            If the vector is not in the lattice
        """
        pairings = self.pairings_of_frame(vector)
        rational = self.dual_coords(pairings)
        if any(value.denominator != 1 for value in rational):
            raise LatticeError("ERROR: frame vector is not in the lattice")
        coords = tuple(int(value.numerator) for value in rational)
        if self.frame_vector(coords) != tuple(to_qq(entry) for entry in vector):
            raise LatticeError("ERROR: frame vector is not in the lattice span")
        return coords

    def dual_coords(self, pairings) -> tuple:
        """Get the rational coordinates of the dual vector with given pairings."""
        values = tuple(to_qq(entry) for entry in pairings)
        return tuple(
            sum((entry * value for entry, value in zip(row, values)), QQ(0))
            for row in self.inverse
        )

    def vector(self, coords) -> "LatticeVector":
        """Wrap coordinates as a LatticeVector of this lattice."""
        return LatticeVector(self, coords)

    def to_dict(self) -> LatticeDict:
        """Serialize as {name, gram}."""
        return {"name": self._name, "gram": [list(row) for row in self._gram]}

    @classmethod
    def from_dict(cls, payload: LatticeDict) -> Lattice:
        """Rebuild a lattice from {name, gram}."""
        try:
            return cls(payload["gram"], name=payload.get("name"))
        except (KeyError, TypeError) as error:
            raise LatticeError(f"ERROR: malformed lattice payload: {error}") from error

    def __eq__(self, other) -> bool:
        """Compare Gram matrices."""
        if not isinstance(other, Lattice):
            return NotImplemented
        return self._gram == other._gram

    def __hash__(self) -> int:
        """Hash the Gram matrix."""
        return hash(self._gram)

    def __repr__(self) -> str:
        """Show the name and rank."""
        return f"Lattice(name={self._name!r}, rank={self.rank})"


class LatticeVector:
    """LatticeVector class.

    Integer coordinates in the basis of an owning lattice.

    Attributes
    ----------
    _lattice: Lattice
        The owning lattice
    _coords: tuple[int, ...]
        The coordinates, of length equal to the rank

    Methods
    -------
    square(self) -> int
        The square of the vector
    is_zero(self) -> bool
        Whether every coordinate vanishes
    is_primitive(self) -> bool
        Whether the gcd of the coordinates is 1
    """

    def __init__(self, lattice: Lattice, coords) -> None:
        """Store the coordinates after checking their length."""
        self._lattice = lattice
        self._coords = lattice.check_coords(coords)

    @property
    def lattice(self) -> Lattice:
        """Get the owning lattice."""
        return self._lattice

    @property
    def coords(self) -> tuple[int, ...]:
        """Get the coordinates."""
        return self._coords

    @property
    def square(self) -> int:
        """Get the square."""
        return self._lattice.square(self._coords)

    @property
    def is_zero(self) -> bool:
        """Check whether the vector is zero."""
        return not any(self._coords)

    @property
    def is_primitive(self) -> bool:
        """Check whether the gcd of the coordinates is 1."""
        return gcd(*self._coords) == 1

    def __add__(self, other: LatticeVector) -> LatticeVector:
        """Add two vectors of the same lattice."""
        if not isinstance(other, LatticeVector):
            return NotImplemented
        return LatticeVector(
            self._lattice, tuple(a + b for a, b in zip(self._coords, other._coords))
        )

    def __neg__(self) -> LatticeVector:
        """Negate the vector."""
        return LatticeVector(self._lattice, tuple(-a for a in self._coords))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        """Subtract two vectors of the same lattice."""
        return self + (-other)

    def __mul__(self, scalar: int) -> LatticeVector:
        """Multiply by an integer."""
        if not isinstance(scalar, int):
            return NotImplemented
        return LatticeVector(self._lattice, tuple(scalar * a for a in self._coords))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        """Compare coordinates and lattices."""
        if not isinstance(other, LatticeVector):
            return NotImplemented
        return self._coords == other._coords and self._lattice == other._lattice

    def __hash__(self) -> int:
        """Hash the coordinates."""
        return hash(self._coords)

    def __lt__(self, other: LatticeVector) -> bool:
        """Order lexicographically on coordinates."""
        return self._coords < other._coords

    def __repr__(self) -> str:
        """Show the coordinates."""
        return f"LatticeVector{self._coords}"
