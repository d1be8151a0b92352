"""This module contains the admissible decorations of an embedding.

A label η of A_{Λ_N} with q(η) = 1 is admissible when η = g([v/2]) for a
vector v of the complement with v² = -4 and (v, complement) ⊂ 2Z, where g is
the glue isomorphism A_{complement} → A_{Λ_N} read off the ambient lattice.
"""
import logging

import sympy

from hkltower.borcherds.embedding import Embedding
from hkltower.dtower.decorated_lattice import DecoratedDLattice
from hkltower.enums.disc_label import DiscLabel
from hkltower.exceptions import ConsistencyError
from hkltower.lattices.enumeration import short_vectors
from hkltower.lattices.quadratic_form import discriminant_group

logger = logging.getLogger(__name__)


def _glue_map(embedding: Embedding, dlattice: DecoratedDLattice, comp_form) -> dict:
    """Get g as a dict from complement classes to Λ_N classes.

    Every ambient vector x pairs with Λ_N and with the complement as a dual
    vector of each, and the pairs of classes it gives span the graph of g.
    """
    ambient = embedding.ambient
    image = [ambient.pairings(row) for row in embedding.image.basis]
    complement = [ambient.pairings(row) for row in embedding.complement.basis]
    generators = set()
    for i in range(ambient.rank):
        alpha = dlattice.form.element_of_pairings(row[i] for row in image)
        gamma = comp_form.element_of_pairings(row[i] for row in complement)
        generators.add((alpha, gamma))
    graph = {(dlattice.form.zero, comp_form.zero)}
    frontier = list(graph)
    while frontier:
        alpha, gamma = frontier.pop()
        for step_alpha, step_gamma in generators:
            pair = (
                dlattice.form.add(alpha, step_alpha),
                comp_form.add(gamma, step_gamma),
            )
            if pair not in graph:
                graph.add(pair)
                frontier.append(pair)
    glue = {}
    for alpha, gamma in graph:
        if glue.setdefault(gamma, alpha) != alpha:
            raise ConsistencyError(f"ERROR: glue of {embedding!r} is not a graph")
    if len(glue) != comp_form.order or len(graph) != comp_form.order:
        raise ConsistencyError(f"ERROR: glue of {embedding!r} is not an isomorphism")
    return glue


def admissible_decorations(embedding: Embedding) -> frozenset[DiscLabel]:
    """Get the labels g([v/2]) of square 1 reached from the complement."""
    dlattice = DecoratedDLattice(embedding.n)
    lattice = embedding.complement_lattice
    comp_form = discriminant_group(lattice)
    glue = _glue_map(embedding, dlattice, comp_form)
    classes = set()
    for vector in short_vectors(lattice, -4):
        pairings = lattice.pairings(vector)
        if any(value % 2 for value in pairings):
            continue
        classes.add(comp_form.element_of_pairings(value // 2 for value in pairings))
    admissible = frozenset(
        dlattice.label_of(glue[gamma])
        for gamma in classes
        if dlattice.form.q(glue[gamma]) == sympy.Integer(1)
    )
    logger.info(
        "admissible decorations of %r: %s",
        embedding,
        sorted(label.value for label in admissible),
    )
    return admissible
