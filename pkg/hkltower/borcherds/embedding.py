"""This module contains the Embedding class.

Λ_N embeds into II_{2,26} as the first summand of the overlattice of
U + U + D_{N-2} + D_m (+ E_8) glued along three vectors, with m = 26 - N for
the D variant and m = 18 - N for the E8D variant. In frame coordinates the
glue vectors are (0, (½,...,½), (½,...,½)), (0, (-½,½,...), (-½,½,...)) and
(0, (1,0,...), (1,0,...)), zero on the E_8 block.
"""
from __future__ import annotations

import logging
from functools import cached_property

import sympy

from hkltower.dtower.decorated_lattice import U_WIDTH, DecoratedDLattice
from hkltower.enums.embedding_variant import EmbeddingVariant
from hkltower.exceptions import ConsistencyError, require_range
from hkltower.lattices.constructors import (
    d_lattice,
    direct_sum,
    e_lattice,
    glue,
    hyperbolic_plane,
)
from hkltower.lattices.enumeration import root_count
from hkltower.lattices.lattice import Lattice
from hkltower.lattices.sublattice import Sublattice, orthogonal_complement
from hkltower.settings import (
    AMBIENT_SIGNATURE,
    FIRST_RELATION_MAX_N,
    MIN_N,
    SECOND_RELATION_MAX_N,
)

logger = logging.getLogger(__name__)

# frame width of E_8
E8_WIDTH = 9


def complement_rank(n: int, variant: EmbeddingVariant) -> int:
    """Get m, the rank of the D summand of the complement."""
    return (26 if variant is EmbeddingVariant.D else 18) - n


def _glue_vectors(n: int, m: int, variant: EmbeddingVariant) -> list[list]:
    half = sympy.Rational(1, 2)
    tail = [0] * E8_WIDTH if variant is EmbeddingVariant.E8D else []
    zeros = [0] * U_WIDTH
    first = [half] * (n - 2) + [half] * m
    second = [-half] + [half] * (n - 3) + [-half] + [half] * (m - 1)
    third = [1] + [0] * (n - 3) + [1] + [0] * (m - 1)
    return [zeros + part + tail for part in (first, second, third)]


class Embedding:
    """Embedding class.

    A saturated embedding of Λ_N into II_{2,26} with its complement.

    Attributes
    ----------
    _n: int
        N
    _variant: EmbeddingVariant
        Which complement
    _ambient: Lattice
        II_{2,26} as a glued overlattice with a frame
    _image: Sublattice
        Λ_N inside the ambient
    _complement: Sublattice
        The orthogonal complement of the image

    Methods
    -------
    weight(self) -> int
        12 + |R(complement)|/2
    ambient_vector(self, coords) -> tuple[int, ...]
        Push a vector of Λ_N into the ambient
    validate(self)
        Check unimodularity, saturation and the complement fingerprint
    """

    def __init__(self, n: int, variant: EmbeddingVariant) -> None:
        """Glue the ambient lattice and split off the complement.

        Raises
        ------
        RangeError
            If N is outside 3..25 for D or 3..17 for E8D
        """
        variant = EmbeddingVariant(variant)
        high = (
            FIRST_RELATION_MAX_N
            if variant is EmbeddingVariant.D
            else SECOND_RELATION_MAX_N
        )
        require_range("N", n, MIN_N, high)
        self._n = n
        self._variant = variant
        m = complement_rank(n, variant)
        parts = [hyperbolic_plane(), hyperbolic_plane(), d_lattice(n - 2)]
        parts.append(d_lattice(m))
        if variant is EmbeddingVariant.E8D:
            parts.append(e_lattice(8))
        base = direct_sum(*parts)
        self._ambient = glue(
            base, _glue_vectors(n, m, variant), name=f"II_2_26[{variant.value},{n}]"
        )
        image_rows = [
            self._ambient.coords_from_frame(row) for row in base.frame[: n + 2]
        ]
        self._image = Sublattice(self._ambient, image_rows)
        self._complement = orthogonal_complement(self._ambient, self._image)
        logger.info(
            "embedded Lambda_%d into %s with complement of rank %d",
            n,
            self._ambient.name,
            self._complement.rank,
        )

    @property
    def n(self) -> int:
        """Get N."""
        return self._n

    @property
    def variant(self) -> EmbeddingVariant:
        """Get the variant."""
        return self._variant

    @property
    def ambient(self) -> Lattice:
        """Get the ambient lattice."""
        return self._ambient

    @property
    def image(self) -> Sublattice:
        """Get Λ_N as a sublattice of the ambient."""
        return self._image

    @property
    def complement(self) -> Sublattice:
        """Get the orthogonal complement of Λ_N."""
        return self._complement

    @cached_property
    def complement_lattice(self) -> Lattice:
        """Get the complement with its induced form."""
        m = complement_rank(self._n, self._variant)
        name = f"D_{m}" if self._variant is EmbeddingVariant.D else f"E_8+D_{m}"
        return self._complement.as_lattice(name=name)

    @cached_property
    def complement_roots(self) -> int:
        """Get |R(complement)|."""
        return root_count(self.complement_lattice)

    @property
    def weight(self) -> int:
        """Get the weight 12 + |R(complement)|/2 of the quasi-pullback."""
        return 12 + self.complement_roots // 2

    def ambient_vector(self, coords) -> tuple[int, ...]:
        """Get the ambient coordinates of a vector of Λ_N."""
        dlattice = DecoratedDLattice(self._n)
        frame = list(dlattice.lattice.frame_vector(coords))
        width = len(self._ambient.frame_form)
        return self._ambient.coords_from_frame(frame + [0] * (width - len(frame)))

    def saturated_roots(self, coords) -> int:
        """Get |R(Sat<v, complement>)| for a negative vector v of Λ_N."""
        vector = self.ambient_vector(coords)
        span = Sublattice(self._ambient, [vector, *self._complement.basis])
        saturated = span.saturation()
        logger.debug(
            "Sat<v, complement> at N=%d has index %d over the span",
            self._n,
            span.index_in(saturated),
        )
        return root_count(saturated.as_lattice())

    def validate(self) -> None:
        """Check the embedding.

        Raises
        ------
        ConsistencyError
            If the ambient is not even unimodular of signature (2, 26), Λ_N is
            not saturated, or the complement has the wrong determinant or
            root count
        """
        problems = []
        if abs(self._ambient.determinant) != 1:
            problems.append(f"ambient determinant {self._ambient.determinant}")
        if self._ambient.signature() != AMBIENT_SIGNATURE:
            problems.append(f"ambient signature {self._ambient.signature()}")
        if not self._image.is_saturated:
            problems.append("Lambda_N is not saturated")
        dlattice = DecoratedDLattice(self._n)
        if self._image.gram != dlattice.lattice.gram:
            problems.append("image Gram matrix differs from Lambda_N")
        m = complement_rank(self._n, self._variant)
        expected_roots = 2 * m * (m - 1)
        if self._variant is EmbeddingVariant.E8D:
            expected_roots += 240
        if abs(self.complement_lattice.determinant) != 4:
            problems.append(
                f"complement determinant {self.complement_lattice.determinant}"
            )
        if self.complement_roots != expected_roots:
            problems.append(
                f"complement has {self.complement_roots} roots, "
                f"expected {expected_roots}"
            )
        if problems:
            raise ConsistencyError(
                f"ERROR: embedding {self._variant.value} at N={self._n}: "
                + "; ".join(problems)
            )

    def __repr__(self) -> str:
        """Show N and the variant."""
        return f"Embedding(N={self._n}, variant={self._variant.value})"


def embed_complement(n: int, variant: EmbeddingVariant) -> Embedding:
    """Build and validate the embedding of Λ_N for a variant."""
    embedding = Embedding(n, variant)
    embedding.validate()
    return embedding
