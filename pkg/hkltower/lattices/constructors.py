"""This module contains the standard lattice constructors.

Every root lattice is negative definite. Each constructor attaches a frame so
that vectors can be given in the usual Euclidean or hyperbolic coordinates:

* ``U(m)``: frame the identity, frame form ``m * [[0, 1], [1, 0]]``;
* ``A_n``: rows ``e_i - e_(i+1)`` in Z^(n+1) with form ``-I``;
* ``D_1``: the rank one lattice (-4), frame ``[[2]]`` with form ``[[-1]]``;
* ``D_n`` (n >= 2): rows ``e_i - e_(i+1)`` for i < n then ``e_(n-1) + e_n``,
  form ``-I``, so D_2 is A_1 + A_1;
* ``E_r``: the orthogonal complement of (3, 1, ..., 1) in (1) + (-1)^r, with
  basis (1, -1, -1, -1, 0, ...) and ``e_i - e_(i+1)`` for r >= 3;
* ``II_{p,q}``: U^p + E_8^((q - p) / 8).
"""
import logging
import re
from math import lcm

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from hkltower.exceptions import LatticeError
from hkltower.lattices.lattice import Lattice
from hkltower.rationals import to_qq

logger = logging.getLogger(__name__)

_STANDARD_NAME = re.compile(
    r"^(?:(?P<u>U)(?:\((?P<m>-?\d+)\))?"
    r"|(?P<root>[ADE])_\{?(?P<n>\d+)\}?"
    r"|II_\{?(?P<p>\d+),(?P<q>\d+)\}?)$"
)


def _gram_of_frame(frame, form) -> list[list[int]]:
    entries = [
        (a, b, weight)
        for a, row in enumerate(form)
        for b, weight in enumerate(row)
        if weight
    ]
    size = len(frame)
    gram = []
    for i in range(size):
        row = []
        for j in range(size):
            value = sum(
                (frame[i][a] * weight * frame[j][b] for a, b, weight in entries),
                QQ(0),
            )
            if value.denominator != 1:
                raise LatticeError("ERROR: non-integral gluing")
            row.append(int(value.numerator))
        gram.append(row)
    return gram


def _framed(frame, form, name: str) -> Lattice:
    rows = [[to_qq(entry) for entry in row] for row in frame]
    return Lattice(_gram_of_frame(rows, form), name=name, frame=rows, frame_form=form)


def _unit_vector(size: int, index: int, value: int = 1) -> list[int]:
    vector = [0] * size
    vector[index] = value
    return vector


def hyperbolic_plane(m: int = 1) -> Lattice:
    """Build U(m), the hyperbolic plane with form scaled by m.

    Parameters
    ----------
    m: int
        Nonzero scale

    Returns
    -------
    lattice: Lattice
        Gram [[0, m], [m, 0]]
    """
    if m == 0:
        raise LatticeError("ERROR: U(0) is degenerate")
    name = "U" if m == 1 else f"U({m})"
    return _framed([[1, 0], [0, 1]], [[0, m], [m, 0]], name)


def a_lattice(n: int) -> Lattice:
    """Build the negative definite root lattice A_n."""
    if n < 1:
        raise LatticeError(f"ERROR: A_{n} needs n >= 1")
    frame = []
    for i in range(n):
        row = _unit_vector(n + 1, i)
        row[i + 1] = -1
        frame.append(row)
    form = [_unit_vector(n + 1, i, -1) for i in range(n + 1)]
    return _framed(frame, form, f"A_{n}")


def d_lattice(n: int) -> Lattice:
    """Build the negative definite lattice D_n.

    D_n is the set of even coordinate sum vectors of Z^n with the negative
    Euclidean form; D_1 is the rank one lattice (-4).

    Parameters
    ----------
    n: int
        Rank, at least 1

    Returns
    -------
    lattice: Lattice
        D_n in the basis e_1 - e_2, ..., e_(n-1) - e_n, e_(n-1) + e_n
    """
    if n < 1:
        raise LatticeError(f"ERROR: D_{n} needs n >= 1")
    if n == 1:
        return _framed([[2]], [[-1]], "D_1")
    frame = []
    for i in range(n - 1):
        row = _unit_vector(n, i)
        row[i + 1] = -1
        frame.append(row)
    last = [0] * n
    last[n - 2] = 1
    last[n - 1] = 1
    frame.append(last)
    form = [_unit_vector(n, i, -1) for i in range(n)]
    return _framed(frame, form, f"D_{n}")


def e_lattice(r: int) -> Lattice:
    """Build E_r, 2 <= r <= 8, as an orthogonal complement in (1) + (-1)^r.

    For r >= 3 the frame spans the complement of (3, -1, ..., -1); for E_2
    it spans the complement of (3, 1, 1). Both vectors have square 9 - r.

    Parameters
    ----------
    r: int
        Rank

    Returns
    -------
    lattice: Lattice
        Negative definite, E_2 has Gram [[-4, 1], [1, -2]]
    """
    if not 2 <= r <= 8:
        raise LatticeError(f"ERROR: E_{r} needs 2 <= r <= 8")
    form = [_unit_vector(r + 1, 0)] + [
        _unit_vector(r + 1, i, -1) for i in range(1, r + 1)
    ]
    if r == 2:
        frame = [[1, 1, 2], [0, 1, -1]]
    else:
        frame = [[1, -1, -1, -1] + [0] * (r - 3)]
        for i in range(1, r):
            row = _unit_vector(r + 1, i)
            row[i + 1] = -1
            frame.append(row)
    return _framed(frame, form, f"E_{r}")


def even_unimodular(p: int, q: int) -> Lattice:
    """Build II_{p,q} as U^p + E_8^((q - p) / 8).

    Raises
    ------
    LatticeError
        If p > q, q - p is not a multiple of 8, or the result is empty
    """
    if p < 0 or p > q or (q - p) % 8 or q == 0:
        raise LatticeError(f"ERROR: invalid signature pair ({p}, {q}) for II")
    parts = [hyperbolic_plane() for _ in range(p)]
    parts += [e_lattice(8) for _ in range((q - p) // 8)]
    return direct_sum(*parts, name=f"II_{{{p},{q}}}")


def direct_sum(*lattices: Lattice, name: str | None = None) -> Lattice:
    """Build the orthogonal direct sum of lattices.

    The frame of the sum is the block frame when every summand has one.

    Parameters
    ----------
    lattices: Lattice
        Summands, at least one
    name: str | None
        Label of the result, defaults to the summand names joined by "+"

    Returns
    -------
    lattice: Lattice
        Block diagonal Gram matrix in the concatenated basis
    """
    if not lattices:
        raise LatticeError("ERROR: direct sum of no lattices")
    size = sum(lattice.rank for lattice in lattices)
    gram = [[0] * size for _ in range(size)]
    offset = 0
    for lattice in lattices:
        for i, row in enumerate(lattice.gram):
            gram[offset + i][offset : offset + lattice.rank] = row
        offset += lattice.rank
    if name is None:
        name = "+".join(lattice.name or "?" for lattice in lattices)
    if any(lattice.frame is None for lattice in lattices):
        return Lattice(gram, name=name)
    width = sum(len(lattice.frame_form) for lattice in lattices)
    frame = []
    form = [[0] * width for _ in range(width)]
    column = 0
    for lattice in lattices:
        block = len(lattice.frame_form)
        for row in lattice.frame:
            full = [QQ(0)] * width
            full[column : column + block] = row
            frame.append(full)
        for i, row in enumerate(lattice.frame_form):
            form[column + i][column : column + block] = row
        column += block
    return Lattice(gram, name=name, frame=frame, frame_form=form)


def rescale(lattice: Lattice, m: int) -> Lattice:
    """Build L(m), the lattice with its form multiplied by m."""
    if m == 0:
        raise LatticeError("ERROR: rescaling by 0 gives a degenerate lattice")
    gram = [[m * entry for entry in row] for row in lattice.gram]
    name = f"{lattice.name}({m})" if lattice.name else None
    if lattice.frame is None:
        return Lattice(gram, name=name)
    form = [[m * entry for entry in row] for row in lattice.frame_form]
    return Lattice(gram, name=name, frame=lattice.frame, frame_form=form)


def standard(name: str) -> Lattice:
    """Build a standard lattice from its name.

    Parameters
    ----------
    name: str
        One of "U", "U(m)", "A_n", "D_n", "E_r" (2 <= r <= 8), "II_{p,q}"

    Returns
    -------
    lattice: Lattice
        The lattice in the documented basis

    Raises
    ------
    LatticeError
        If the name is unknown or its parameters are invalid
    """
    match = _STANDARD_NAME.match(name.replace(" ", ""))
    if match is None:
        raise LatticeError(f"ERROR: unknown standard lattice {name!r}")
    if match["u"]:
        return hyperbolic_plane(int(match["m"] or 1))
    if match["root"]:
        builder = {"A": a_lattice, "D": d_lattice, "E": e_lattice}[match["root"]]
        return builder(int(match["n"]))
    return even_unimodular(int(match["p"]), int(match["q"]))


def glue(base: Lattice, glue_vectors, name: str | None = None) -> Lattice:
    """Build the overlattice of base generated by glue vectors.

    Parameters
    ----------
    base: Lattice
        A framed lattice
    glue_vectors: sequence of sequences of rationals
        Frame coordinates of vectors in the rational span of base
    name: str | None
        Label of the overlattice

    Returns
    -------
    lattice: Lattice
        The overlattice in its Hermite normal form basis, carrying a frame

    Raises
    ------
    LatticeError
        If a glue vector leaves the rational span or the result is not an
        even integral lattice
    """
    if base.frame is None:
        raise LatticeError("ERROR: gluing needs a framed lattice")
    generators = [[QQ(int(i == j)) for j in range(base.rank)] for i in range(base.rank)]
    for vector in glue_vectors:
        coords = base.dual_coords(base.pairings_of_frame(vector))
        if base.frame_combination(coords) != tuple(to_qq(x) for x in vector):
            raise LatticeError("ERROR: glue vector outside the span of the lattice")
        generators.append(list(coords))
    denominator = lcm(*(int(entry.denominator) for row in generators for entry in row))
    scaled = DomainMatrix(
        [[ZZ(int(entry * denominator)) for entry in row] for row in generators],
        (len(generators), base.rank),
        ZZ,
    )
    columns = hermite_normal_form(scaled.transpose()).transpose().to_list()
    basis = [[QQ(int(entry), denominator) for entry in row] for row in columns]
    logger.debug("glued %s with %d glue vectors", base.name, len(glue_vectors))
    frame = [
        [
            sum((row[i] * base.frame[i][k] for i in range(base.rank)), QQ(0))
            for k in range(len(base.frame_form))
        ]
        for row in basis
    ]
    gram = _gram_of_frame(frame, base.frame_form)
    return Lattice(gram, name=name, frame=frame, frame_form=base.frame_form)
