"""This module contains exact short vector enumeration in definite lattices.

The Gram matrix is LLL reduced with exact rationals, then enumerated with the
Fincke-Pohst recursion on the exact Cholesky form. Coordinate bounds are exact
integers, nothing is rounded through floating point.
"""
import itertools
import logging
from math import isqrt

from sympy import QQ

from hkltower.exceptions import IndefiniteLatticeError, LatticeError
from hkltower.lattices.lattice import Lattice
from hkltower.rationals import floor_of, to_qq
from hkltower.settings import LLL_DELTA, ORACLE_MAX_RANK

logger = logging.getLogger(__name__)


def _definite_form(lattice: Lattice, norm: int) -> tuple[list[list[int]], int]:
    """Get a positive definite Gram matrix and positive bound for the search."""
    if not lattice.is_definite:
        raise IndefiniteLatticeError("ERROR: enumeration requires definite lattice")
    sign = -1 if lattice.is_negative_definite else 1
    if norm * sign <= 0:
        raise LatticeError(
            f"ERROR: norm {norm} has the wrong sign for lattice {lattice.name}"
        )
    return [[sign * entry for entry in row] for row in lattice.gram], sign * norm


def _gram_schmidt(gram) -> tuple[list[list], list]:
    size = len(gram)
    mu = [[QQ(0)] * size for _ in range(size)]
    lengths = [QQ(0)] * size
    for i in range(size):
        for j in range(i):
            value = gram[i][j] - sum(
                (mu[j][k] * mu[i][k] * lengths[k] for k in range(j)), QQ(0)
            )
            mu[i][j] = value / lengths[j]
        lengths[i] = gram[i][i] - sum(
            (mu[i][k] * mu[i][k] * lengths[k] for k in range(i)), QQ(0)
        )
    return mu, lengths


def _nearest(value) -> int:
    return floor_of(value + QQ(1, 2))


def lll_reduce(gram) -> tuple[list[list[int]], list[list[int]]]:
    """LLL reduce a positive definite Gram matrix with exact arithmetic.

    Parameters
    ----------
    gram: sequence of sequences of int
        Positive definite Gram matrix

    Returns
    -------
    reduced: list[list[int]]
        The Gram matrix of the reduced basis
    transform: list[list[int]]
        Rows expressing the reduced basis in the original basis
    """
    size = len(gram)
    current = [[QQ(entry) for entry in row] for row in gram]
    transform = [[int(i == j) for j in range(size)] for i in range(size)]
    delta = QQ(*LLL_DELTA)
    mu, lengths = _gram_schmidt(current)

    def size_reduce(k: int, j: int) -> None:
        factor = _nearest(mu[k][j])
        if not factor:
            return
        transform[k] = [a - factor * b for a, b in zip(transform[k], transform[j])]
        diagonal = current[k][k] - 2 * factor * current[k][j]
        diagonal += factor * factor * current[j][j]
        for col in range(size):
            if col != k:
                current[k][col] -= factor * current[j][col]
                current[col][k] = current[k][col]
        current[k][k] = diagonal
        for col in range(j):
            mu[k][col] -= factor * mu[j][col]
        mu[k][j] -= factor

    k = 1
    swaps = 0
    while k < size:
        size_reduce(k, k - 1)
        if lengths[k] >= (delta - mu[k][k - 1] ** 2) * lengths[k - 1]:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
            continue
        transform[k], transform[k - 1] = transform[k - 1], transform[k]
        current[k], current[k - 1] = current[k - 1], current[k]
        for row in current:
            row[k], row[k - 1] = row[k - 1], row[k]
        mu, lengths = _gram_schmidt(current)
        swaps += 1
        k = max(k - 1, 1)
    logger.debug("LLL reduced rank %d with %d swaps", size, swaps)
    reduced = [[int(entry) for entry in row] for row in current]
    return reduced, transform


def _cholesky(gram) -> list[list]:
    """Get the exact quadratic form decomposition q(x) = sum q_ii (x_i + ...)^2."""
    size = len(gram)
    q = [[QQ(entry) for entry in row] for row in gram]
    for i in range(size):
        for j in range(i + 1, size):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, size):
            for col in range(k, size):
                q[k][col] -= q[k][i] * q[i][col]
    return q


def _fincke_pohst(gram, bound: int):
    """Yield every nonzero x with x^T gram x <= bound, gram positive definite."""
    size = len(gram)
    q = _cholesky(gram)
    x = [0] * size
    limit = QQ(bound)
    nodes = 0

    def descend(i: int, remaining):
        nonlocal nodes
        center = -sum((q[i][j] * x[j] for j in range(i + 1, size)), QQ(0))
        radius = remaining / q[i][i]
        base = floor_of(center)
        reach = isqrt(floor_of(radius)) + 2
        for value in range(base - reach, base + reach + 1):
            offset = value - center
            if offset * offset > radius:
                continue
            nodes += 1
            x[i] = value
            left = remaining - q[i][i] * offset * offset
            if i == 0:
                yield tuple(x)
            else:
                yield from descend(i - 1, left)
        x[i] = 0

    for vector in descend(size - 1, limit):
        if any(vector):
            yield vector
    logger.debug("Fincke-Pohst visited %d nodes in rank %d", nodes, size)


def short_vectors(lattice: Lattice, norm: int) -> list[tuple[int, ...]]:
    """List every vector of a definite lattice with the given square.

    Parameters
    ----------
    lattice: Lattice
        A negative or positive definite lattice
    norm: int
        The required square, of the sign of the form

    Returns
    -------
    vectors: list[tuple[int, ...]]
        Coordinates in the lattice basis, sorted lexicographically, closed
        under negation

    Raises
    ------
    IndefiniteLatticeError
        If the lattice is indefinite
    """
    positive, bound = _definite_form(lattice, norm)
    reduced, transform = lll_reduce(positive)
    size = lattice.rank
    found = []
    for small in _fincke_pohst(reduced, bound):
        if _square(reduced, small) != bound:
            continue
        found.append(
            tuple(
                sum(small[i] * transform[i][j] for i in range(size) if small[i])
                for j in range(size)
            )
        )
    found.sort()
    return found


def count_vectors(lattice: Lattice, norm: int) -> int:
    """Count the vectors of a definite lattice with the given square."""
    return len(short_vectors(lattice, norm))


def root_count(lattice: Lattice) -> int:
    """Count the roots, the vectors of square -2, of a negative definite lattice."""
    if not lattice.is_negative_definite:
        raise IndefiniteLatticeError("ERROR: enumeration requires definite lattice")
    return count_vectors(lattice, -2)


def _square(gram, x) -> int:
    return sum(
        x[i] * gram[i][j] * x[j]
        for i in range(len(x))
        if x[i]
        for j in range(len(x))
        if x[j]
    )


def short_vectors_bruteforce(lattice: Lattice, norm: int) -> list[tuple[int, ...]]:
    """List the vectors of a given square by an exhaustive box search.

    Each coordinate satisfies x_i^2 <= |norm| (A^-1)_ii for the positive
    definite form A, which bounds the box.

    Parameters
    ----------
    lattice: Lattice
        A definite lattice of rank at most ORACLE_MAX_RANK
    norm: int
        The required square

    Returns
    -------
    vectors: list[tuple[int, ...]]
        Sorted lexicographically
    """
    if lattice.rank > ORACLE_MAX_RANK:
        raise LatticeError(
            f"ERROR: brute force search is limited to rank {ORACLE_MAX_RANK}"
        )
    positive, bound = _definite_form(lattice, norm)
    sign = -1 if lattice.is_negative_definite else 1
    boxes = []
    for i in range(lattice.rank):
        diagonal = sign * to_qq(lattice.inverse[i][i])
        reach = isqrt(floor_of(diagonal * bound))
        boxes.append(range(-reach, reach + 1))
    return sorted(
        vector
        for vector in itertools.product(*boxes)
        if any(vector) and _square(positive, vector) == bound
    )
