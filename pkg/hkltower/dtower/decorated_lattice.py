"""This module contains the DecoratedDLattice class."""
from __future__ import annotations

import itertools
import logging
from functools import cached_property
from math import gcd

import sympy

from hkltower.dict_structures.classification_dict import ClassificationDict
from hkltower.dtower.invariants import unigonal_is_reflective, unigonal_residue
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.vector_kind import VectorKind
from hkltower.exceptions import (
    ConsistencyError,
    LatticeError,
    NotPrimitiveError,
    ZeroVectorError,
    require_range,
)
from hkltower.lattices.constructors import d_lattice, direct_sum, hyperbolic_plane
from hkltower.lattices.lattice import Lattice
from hkltower.lattices.quadratic_form import (
    FiniteQuadraticForm,
    disc_class,
    discriminant_group,
    divisibility,
)
from hkltower.settings import FIND_VECTOR_U_BOX, MIN_N

logger = logging.getLogger(__name__)

# width of the two hyperbolic planes in frame coordinates
U_WIDTH = 4


class DecoratedDLattice:
    """DecoratedDLattice class.

    Λ_N = U + U + D_{N-2} in the standard assembled basis, with a decoration
    of square 1 in its discriminant group. The four elements of A_{Λ_N} are
    named 0, ξ, ζ and ζ' after the classes of (0,...,0), (1,0,...,0),
    (½,...,½) and (-½,½,...,½) in the D factor.

    Attributes
    ----------
    _n: int
        N, the dimension of the period space
    _decoration: DiscLabel
        The name of the decoration, ξ unless N = 6 mod 8 allows another

    Methods
    -------
    classify(self, vector) -> VectorKind
        Nodal, hyperelliptic, unigonal or other
    is_reflective(self, vector) -> bool
        Whether the reflection in the vector lies in the decorated group
    eichler_equivalent(self, first, second) -> bool
        Equal squares and equivalent discriminant classes
    minimal_vector(self, label) -> tuple[int, ...] | None
        An explicit minimal norm vector whose class is the label
    find_vector(self, kind) -> tuple[int, ...] | None
        A vector of the kind found by a bounded search
    """

    def __init__(self, n: int, decoration: DiscLabel = DiscLabel.xi) -> None:
        """Build Λ_N and check the decoration.

        Raises
        ------
        RangeError
            If N < 3
        LatticeError
            If the decoration does not have square 1
        """
        require_range("N", n, MIN_N)
        self._n = n
        self._decoration = DiscLabel(decoration)
        if self.form.q(self.labels[self._decoration]) != 1:
            raise LatticeError(
                f"ERROR: {self._decoration.value} does not have square 1 at N={n}"
            )

    @property
    def n(self) -> int:
        """Get N."""
        return self._n

    @property
    def residue(self) -> int:
        """Get a = (N - 2) mod 8."""
        return unigonal_residue(self._n)

    @property
    def decoration(self) -> DiscLabel:
        """Get the name of the decoration."""
        return self._decoration

    @cached_property
    def lattice(self) -> Lattice:
        """Get Λ_N with its frame."""
        return direct_sum(
            hyperbolic_plane(),
            hyperbolic_plane(),
            d_lattice(self._n - 2),
            name=f"Lambda_{self._n}",
        )

    @cached_property
    def form(self) -> FiniteQuadraticForm:
        """Get the discriminant form of Λ_N."""
        return discriminant_group(self.lattice)

    @cached_property
    def labels(self) -> dict[DiscLabel, tuple[int, ...]]:
        """Get the element of A_{Λ_N} named by each label."""
        half = sympy.Rational(1, 2)
        rank = self._n - 2
        d_parts = {
            DiscLabel.zero: [0] * rank,
            DiscLabel.xi: [1] + [0] * (rank - 1),
            DiscLabel.zeta: [half] * rank,
            DiscLabel.zeta_prime: [-half] + [half] * (rank - 1),
        }
        labels = {}
        for label, d_part in d_parts.items():
            pairings = self.lattice.pairings_of_frame([0] * U_WIDTH + d_part)
            if any(value.denominator != 1 for value in pairings):
                raise ArithmeticError(f"ERROR: {label.value} is not a dual vector")
            labels[label] = self.form.element_of_pairings(
                int(value.numerator) for value in pairings
            )
        return labels

    @cached_property
    def _names(self) -> dict[tuple[int, ...], DiscLabel]:
        return {element: label for label, element in self.labels.items()}

    @cached_property
    def _decoration_pairings(self) -> tuple[int, ...]:
        """Get the pairings with the basis of a dual vector lifting the decoration."""
        d_part = [0] * (self._n - 2)
        if self._decoration is DiscLabel.xi:
            d_part[0] = 1
        else:
            d_part = [sympy.Rational(1, 2)] * len(d_part)
            if self._decoration is DiscLabel.zeta_prime:
                d_part[0] = -d_part[0]
        pairings = self.lattice.pairings_of_frame([0] * U_WIDTH + d_part)
        return tuple(int(value.numerator) for value in pairings)

    def label_of(self, element) -> DiscLabel:
        """Get the name of an element of A_{Λ_N}."""
        return self._names[self.form.reduce(element)]

    @property
    def unigonal_labels(self) -> frozenset[DiscLabel]:
        """Get the nonzero labels other than the decoration."""
        return frozenset(DiscLabel) - {DiscLabel.zero, self._decoration}

    def vector_from_frame(self, u_part, d_part) -> tuple[int, ...]:
        """Get lattice coordinates from U + U and Euclidean D coordinates.

        Parameters
        ----------
        u_part: sequence of int
            (x_1, y_1, x_2, y_2), the vector x_1 e_1 + y_1 f_1 + x_2 e_2 + y_2 f_2
        d_part: sequence of int
            N - 2 Euclidean coordinates with even sum

        Raises
        ------
        LatticeError
            If the coordinates do not give a vector of Λ_N
        """
        u_part = list(u_part)
        d_part = list(d_part)
        if len(u_part) != U_WIDTH or len(d_part) != self._n - 2:
            raise LatticeError(
                f"ERROR: need {U_WIDTH} U and {self._n - 2} D coordinates"
            )
        return self.lattice.coords_from_frame(u_part + d_part)

    def _check(self, vector) -> tuple[int, ...]:
        coords = self.lattice.check_coords(vector)
        if not any(coords):
            raise ZeroVectorError("ERROR: the zero vector cannot be classified")
        if gcd(*coords) != 1:
            raise NotPrimitiveError("ERROR: vector not primitive")
        return coords

    def disc_label(self, vector) -> DiscLabel:
        """Get the name of v / div(v) in A_{Λ_N}."""
        coords = self._check(vector)
        return self.label_of(disc_class(self.lattice, coords, self.form))

    def classify(self, vector) -> VectorKind:
        """Classify a primitive vector.

        Nodal: square -2, divisibility 1. Hyperelliptic: square -4,
        divisibility 2, class the decoration. Unigonal, when a != 0: square
        -4a and divisibility 4 for N odd, square -a and divisibility 2 for
        N even, class one of the two other nonzero labels.

        Raises
        ------
        ZeroVectorError
            If v is zero
        NotPrimitiveError
            If v is not primitive
        """
        coords = self._check(vector)
        square = self.lattice.square(coords)
        div = divisibility(self.lattice, coords)
        if square == -2 and div == 1:
            return VectorKind.nodal
        if square >= 0:
            return VectorKind.other
        label = self.disc_label(coords)
        if square == -4 and div == 2 and label is self._decoration:
            return VectorKind.hyperelliptic
        a = self.residue
        if a == 0 or label not in self.unigonal_labels:
            return VectorKind.other
        if self._n % 2 and square == -4 * a and div == 4:
            return VectorKind.unigonal
        if self._n % 2 == 0 and square == -a and div == 2:
            return VectorKind.unigonal
        return VectorKind.other

    def reflection_preserves(self, vector) -> bool:
        """Check directly whether ρ_v preserves Λ_N and fixes the decoration.

        ρ_v(x) = x - 2(x, v)/v² v, so ρ_v(Λ) = Λ iff v² divides 2 div(v), and
        it fixes the decoration iff 2(x_dec, v)/v² is an integer for a dual
        vector x_dec lifting it. ρ_v lies in O⁺ since v² < 0.
        """
        coords = self._check(vector)
        square = self.lattice.square(coords)
        if square >= 0:
            return False
        div = divisibility(self.lattice, coords)
        if (2 * div) % square:
            return False
        pairing = sum(c * x for c, x in zip(self._decoration_pairings, coords))
        return (2 * pairing) % square == 0

    def is_reflective(self, vector) -> bool:
        """Check whether the reflection in v lies in the decorated group.

        Nodal and hyperelliptic vectors are reflective, unigonal ones exactly
        when N = 3, 4 mod 8. The rule is cross-checked with the direct
        criterion.

        Raises
        ------
        ConsistencyError
            If the rule and the direct criterion disagree
        """
        kind = self.classify(vector)
        if kind is VectorKind.other:
            return self.reflection_preserves(vector)
        by_rule = kind is not VectorKind.unigonal or unigonal_is_reflective(self._n)
        direct = self.reflection_preserves(vector)
        if by_rule != direct:
            raise ConsistencyError(
                f"ERROR: reflectivity of a {kind.value} vector at N={self._n} "
                f"is {by_rule} by rule and {direct} directly"
            )
        return by_rule

    def eichler_equivalent(self, first, second) -> bool:
        """Compare squares and discriminant classes up to swapping ζ and ζ'."""
        if self.lattice.square(self._check(first)) != self.lattice.square(
            self._check(second)
        ):
            return False
        left = self.disc_label(first)
        right = self.disc_label(second)
        if left is right:
            return True
        return {left, right} <= self.unigonal_labels

    def minimal_vector(self, label: DiscLabel) -> tuple[int, ...] | None:
        """Get an explicit minimal norm vector whose class is the label.

        With N - 2 = 8k + a: e - f for 0; (0, 2e_1) for ξ, or 2e + the D_1
        generator when N = 3; (2e + 2kf, (±1, 1, ..., 1)) for ζ and ζ' when
        N is even; (4e + 4kf, (2, ..., 2)) and its negative when N is odd.

        Returns
        -------
        coords: tuple[int, ...] | None
            None for ζ and ζ' when N = 2 mod 8
        """
        rank = self._n - 2
        k, a = divmod(rank, 8)
        label = DiscLabel(label)
        if label is DiscLabel.zero:
            return self.vector_from_frame((1, -1, 0, 0), [0] * rank)
        if label is DiscLabel.xi:
            if rank == 1:
                return self.vector_from_frame((2, 0, 0, 0), [2])
            return self.vector_from_frame((0, 0, 0, 0), [2] + [0] * (rank - 1))
        if self._n % 2 == 0:
            if a == 0:
                return None
            d_part = [1] * rank
            if label is DiscLabel.zeta_prime:
                d_part[0] = -1
            return self.vector_from_frame((2, 2 * k, 0, 0), d_part)
        vector = self.vector_from_frame((4, 4 * k, 0, 0), [2] * rank)
        if label is DiscLabel.zeta_prime:
            return tuple(-value for value in vector)
        return vector

    def _d_patterns(self) -> list[list[int]]:
        rank = self._n - 2
        patterns = [[0] * rank, [2] + [0] * (rank - 1), [2] * rank]
        if rank >= 2:
            patterns.append([1, 1] + [0] * (rank - 2))
        patterns.append([1] * rank)
        patterns.append([-1] + [1] * (rank - 1))
        return patterns

    def find_vector(self, kind: VectorKind) -> tuple[int, ...] | None:
        """Search a bounded box for a primitive vector of the given kind.

        The first U block ranges over |x|, |y| <= FIND_VECTOR_U_BOX and the D
        part over a few fixed patterns.

        Returns
        -------
        coords: tuple[int, ...] | None
            None when the kind does not occur at N or the search fails
        """
        kind = VectorKind(kind)
        if kind is VectorKind.unigonal and self.residue == 0:
            return None
        box = range(-FIND_VECTOR_U_BOX, FIND_VECTOR_U_BOX + 1)
        pairs = sorted(itertools.product(box, box), key=lambda p: abs(p[0]) + abs(p[1]))
        for d_part in self._d_patterns():
            try:
                base = self.vector_from_frame((0, 0, 0, 0), d_part)
            except LatticeError:
                continue
            d_square = self.lattice.square(base)
            for x, y in pairs:
                if kind is not VectorKind.other and not -32 <= 2 * x * y + d_square < 0:
                    continue
                coords = self.vector_from_frame((x, y, 0, 0), d_part)
                if not any(coords) or gcd(*coords) != 1:
                    continue
                if self.classify(coords) is kind:
                    logger.debug("found a %s vector at N=%d", kind.value, self._n)
                    return coords
        logger.warning("no %s vector found at N=%d", kind.value, self._n)
        return None

    def check_invariants(self) -> None:
        """Check the square and torsion relations of the four labels.

        Raises
        ------
        ConsistencyError
            If q(ξ) != 1, q(ζ) != q(ζ') != -(N-2)/4 mod 2, or the 2-torsion
            relations fail
        """
        form = self.form
        xi = self.labels[DiscLabel.xi]
        zeta = self.labels[DiscLabel.zeta]
        zeta_prime = self.labels[DiscLabel.zeta_prime]
        expected = sympy.Rational(-(self._n - 2), 4) % 2
        problems = []
        if form.q(xi) != 1:
            problems.append("q(xi) != 1")
        if form.q(zeta) != expected or form.q(zeta_prime) != expected:
            problems.append("q(zeta) or q(zeta') != -(N-2)/4")
        double = form.zero if self._n % 2 == 0 else xi
        if form.scale(zeta, 2) != double or form.scale(zeta_prime, 2) != double:
            problems.append("2 zeta or 2 zeta' has the wrong value")
        if form.scale(xi, 2) != form.zero:
            problems.append("2 xi != 0")
        if len(set(self.labels.values())) != 4:
            problems.append("labels are not distinct")
        if problems:
            raise ConsistencyError(
                f"ERROR: discriminant labels at N={self._n}: {', '.join(problems)}"
            )

    def classification(self, vector) -> ClassificationDict:
        """Get the full classification of a vector as a dict."""
        coords = self._check(vector)
        return {
            "N": self._n,
            "coords": list(coords),
            "square": self.lattice.square(coords),
            "divisibility": divisibility(self.lattice, coords),
            "disc_class": self.disc_label(coords).value,
            "kind": self.classify(coords).value,
            "reflective": self.is_reflective(coords),
        }

    def __repr__(self) -> str:
        """Show N and the decoration."""
        return f"DecoratedDLattice(N={self._n}, decoration={self._decoration.value})"


def make_dlattice(n: int, decoration: DiscLabel = DiscLabel.xi) -> DecoratedDLattice:
    """Build Λ_N with a decoration.

    For N = 6 mod 8 all three nonzero classes have square 1 and the class of
    (1, 0, ..., 0) is chosen unless another decoration is asked for.
    """
    dlattice = DecoratedDLattice(n, decoration)
    if n % 8 == 6:
        logger.info(
            "N=%d has three square 1 classes, decoration %s", n, decoration.value
        )
    return dlattice
