"""Dihedral foldings A_n -> I_2(n+1), D_n -> I_2(2n-2) and their LCM-homomorphisms.

A folding sends every vertex of one part of the (bipartite) Coxeter graph to
``s`` and every vertex of the other part to ``t``.  The induced monoid map
sends ``s`` to Δ of its fiber, which for an independent set is simply the
product of the fiber's generators.
"""
import logging
from typing import Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from .artin import (
    OracleVerdict,
    PositiveWord,
    brute_force_equal,
    delta_commuting,
    lcm_pair,
    prod_word,
    word_left_divides,
    words_equal,
)
from .config import get_settings
from .coxeter import INFINITY, CoxeterGraph, GraphKind, coxeter_number, type_i2
from .errors import GraphError, WordError
from .models import LcmHomReport

logger = logging.getLogger(__name__)

# exhaustive oracle confirmation of the length-h relation is limited to small images
ORACLE_MAX_H = 6
ORACLE_MAX_IMAGE_LENGTH = 4


class Folding(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: CoxeterGraph
    h: int
    k_s: Tuple[int, ...]
    k_t: Tuple[int, ...]
    flipped: bool = False

    @property
    def target(self) -> CoxeterGraph:
        return type_i2(self.h)


def _edge_graph(g: CoxeterGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.generators())
    graph.add_edges_from((i, j) for i, j, m in g.edges if m == INFINITY or m >= 3)
    return graph


def bipartition(g: CoxeterGraph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Split the vertices into two independent sets; the part holding s_1 comes first."""
    graph = _edge_graph(g)
    if g.rank < 2:
        raise GraphError(f"{g.name} has a single vertex; a folding needs two nonempty parts")
    if not nx.is_connected(graph):
        raise GraphError(f"{g.name} is not connected")
    if not nx.is_bipartite(graph):
        raise GraphError(f"{g.name} is not bipartite")
    colour = nx.bipartite.color(graph)
    first = tuple(sorted(v for v in graph if colour[v] == colour[1]))
    second = tuple(sorted(v for v in graph if colour[v] != colour[1]))
    return first, second


def dihedral_folding(g: CoxeterGraph, flipped: bool = False) -> Folding:
    """The folding of A_n or D_n onto I_2(h), h the Coxeter number.

    ``I_2(m)`` folds onto itself by the identity.  ``flipped`` swaps K_s and K_t.
    """
    if g.kind not in (GraphKind.A, GraphKind.D, GraphKind.I2):
        raise GraphError(f"Dihedral foldings are only built for A, D and I2 graphs, not {g.name}")
    k_s, k_t = bipartition(g)
    if flipped:
        k_s, k_t = k_t, k_s
    return Folding(source=g, h=coxeter_number(g), k_s=k_s, k_t=k_t, flipped=flipped)


def lcm_hom_images(f: Folding) -> Tuple[PositiveWord, PositiveWord]:
    """(x, y) = (Δ_{K_s}, Δ_{K_t}), the images of s and t."""
    return delta_commuting(f.source, f.k_s), delta_commuting(f.source, f.k_t)


def fold_word(f: Folding, w: PositiveWord) -> PositiveWord:
    """Image of a word over I_2(h) (1 = s, 2 = t) under the LCM-homomorphism."""
    if w.graph != f.target:
        raise WordError(f"Word lives over {w.graph.name}, expected {f.target.name}")
    x, y = lcm_hom_images(f)
    letters = []
    for s in w.letters:
        letters.extend(x.letters if s == 1 else y.letters)
    return PositiveWord(f.source, tuple(letters))


def verify_lcm_hom(f: Folding) -> LcmHomReport:
    """Check that the images satisfy the length-h relation and no shorter one."""
    x, y = lcm_hom_images(f)
    h = f.h
    left, right = prod_word(x, y, h), prod_word(y, x, h)
    relation_at_h = words_equal(left, right)
    divisibility = word_left_divides(x, left) and word_left_divides(y, left)

    first_shorter = None
    for r in range(1, h):
        if words_equal(prod_word(x, y, r), prod_word(y, x, r)):
            first_shorter = r
            logger.warning("Images of %s fold satisfy a relation of length %d < %d",
                           f.source.name, r, h)
            break

    respects_lcm = words_equal(lcm_pair(x, y), left)

    oracle = None
    settings = get_settings()
    if (h <= ORACLE_MAX_H and max(len(x), len(y)) <= ORACLE_MAX_IMAGE_LENGTH
            and len(left) <= settings.oracle_max_length):
        oracle = brute_force_equal(left, right, settings.oracle_budget)
    oracle_ok = oracle in (None, OracleVerdict.BUDGET_EXCEEDED) or (
        (oracle == OracleVerdict.EQUAL) == relation_at_h)

    return LcmHomReport(
        source=f.source.to_spec(),
        h=h,
        x=str(x),
        y=str(y),
        relation_at_h=relation_at_h,
        divisibility=divisibility,
        first_shorter_relation=first_shorter,
        respects_lcm=respects_lcm,
        oracle=oracle.value if oracle is not None else None,
        passed=relation_at_h and divisibility and first_shorter is None and respects_lcm and oracle_ok,
    )
