"""Curve graphs, the topology of their regular neighborhoods, and the
homology (transvection) action of Dehn twists along the curves.
"""
import logging
import random
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from .artin import PositiveWord
from .coxeter import CoxeterGraph, GraphKind
from .errors import GraphError, MatrixOverflowError, WordError

logger = logging.getLogger(__name__)

# products whose entries could exceed this bound abort instead of wrapping
MATRIX_ENTRY_LIMIT = 2 ** 62


class CurveGraph(BaseModel):
    """Curves a_1..a_n and their geometric intersection numbers (absent pair = 0)."""

    model_config = ConfigDict(frozen=True)

    curves: Tuple[str, ...]
    intersections: Tuple[Tuple[int, int, int], ...] = ()

    @property
    def size(self) -> int:
        return len(self.curves)

    def intersection(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        for u, v, mult in self.intersections:
            if (u, v) == (a, b):
                return mult
        return 0

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.size + 1))
        graph.add_edges_from((i, j) for i, j, _ in self.intersections)
        return graph


class SurfaceType(BaseModel):
    model_config = ConfigDict(frozen=True)

    genus: int
    boundary: int
    chi: int

    @model_validator(mode="after")
    def _euler_formula(self):
        if self.chi != 2 - 2 * self.genus - self.boundary:
            raise ValueError("chi must equal 2 - 2g - b")
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count are nonnegative")
        return self


def _curve_graph(n: int, pairs: Sequence[Tuple[int, int]]) -> CurveGraph:
    return CurveGraph(
        curves=tuple(f"a_{i}" for i in range(1, n + 1)),
        intersections=tuple(sorted((min(i, j), max(i, j), 1) for i, j in pairs)),
    )


def chain_graph(p: int) -> CurveGraph:
    """Chain C_p: consecutive curves meet once, all others are disjoint."""
    if p < 1:
        raise GraphError(f"A chain needs at least one curve, got {p}")
    return _curve_graph(p, [(i, i + 1) for i in range(1, p)])


def d_graph(n: int) -> CurveGraph:
    """Curves whose curve graph is D_n (a_{n-2} meets a_{n-1} and a_n)."""
    if n < 4:
        raise GraphError(f"D_n curve graphs need n >= 4, got {n}")
    pairs = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    return _curve_graph(n, pairs)


def curve_graph_from_coxeter(g: CoxeterGraph) -> CurveGraph:
    """Curve configuration realising a small-type graph: label 3 = one intersection."""
    if g.kind == GraphKind.A:
        return chain_graph(g.rank)
    if g.kind == GraphKind.D:
        return d_graph(g.rank)
    bad = [(i, j, m) for i, j, m in g.edges if m != 3]
    if bad:
        raise GraphError(f"Edges {bad} have labels other than 3; no curve configuration")
    return _curve_graph(g.rank, [(i, j) for i, j, _ in g.edges])


# ---------------------------------------------------------------------------
# regular neighborhood


def _require_unit_tree(cg: CurveGraph) -> nx.Graph:
    if any(mult != 1 for _, _, mult in cg.intersections):
        raise GraphError("Only unit intersection numbers are supported")
    graph = cg.to_networkx()
    if cg.size == 0:
        raise GraphError("Empty curve system")
    if not nx.is_tree(graph):
        raise GraphError("Curve graph must be a connected tree")
    return graph


def surface_of(cg: CurveGraph, rng: Optional[random.Random] = None) -> SurfaceType:
    """Topological type (g, b, χ) of the regular neighborhood of the curves.

    The neighborhood is a plumbing of annuli; it deformation retracts to the
    4-valent fat graph whose vertices are the intersection points and whose
    edges are the arcs of the curves between them.  Boundary components are
    the cycles of the face permutation.  ``rng`` randomises the order of the
    intersection points along each curve and the crossing signs.
    """
    graph = _require_unit_tree(cg)
    e = graph.number_of_edges()
    if e == 0:
        return SurfaceType(genus=0, boundary=2, chi=0)

    # darts 2k (leaving a crossing) and 2k+1 (arriving), like a fat graph encoding
    out_dart: Dict[Tuple[int, frozenset], int] = {}
    in_dart: Dict[Tuple[int, frozenset], int] = {}
    edge = 0
    for c in graph.nodes:
        crossings = [frozenset((c, d)) for d in sorted(graph.neighbors(c))]
        if rng is not None:
            rng.shuffle(crossings)
        for j, x in enumerate(crossings):
            nxt = crossings[(j + 1) % len(crossings)]
            out_dart[(c, x)] = 2 * edge
            in_dart[(c, nxt)] = 2 * edge + 1
            edge += 1

    rotation = [0] * (2 * edge)
    for c, d in graph.edges:
        x = frozenset((c, d))
        sign = rng.choice((1, -1)) if rng is not None else 1
        if sign > 0:
            cycle = [out_dart[(c, x)], out_dart[(d, x)], in_dart[(c, x)], in_dart[(d, x)]]
        else:
            cycle = [out_dart[(c, x)], in_dart[(d, x)], in_dart[(c, x)], out_dart[(d, x)]]
        for k in range(4):
            rotation[cycle[k]] = cycle[(k + 1) % 4]

    faces = 0
    seen = [False] * (2 * edge)
    for start in range(2 * edge):
        if seen[start]:
            continue
        faces += 1
        dart = start
        while not seen[dart]:
            seen[dart] = True
            dart = rotation[dart ^ 1]

    chi = e - 2 * e
    genus, rem = divmod(2 - chi - faces, 2)
    if rem:
        raise ArithmeticError(f"Boundary tracing gave an odd 2 - chi - b for {cg.curves}")
    logger.debug("Neighborhood of %d curves: g=%d b=%d chi=%d", cg.size, genus, faces, chi)
    return SurfaceType(genus=genus, boundary=faces, chi=chi)


def closed_form_surface(kind: str, n: int) -> SurfaceType:
    """Known types: S_{A_n} and S_{D_n}."""
    if kind == "A":
        genus, boundary = (n // 2, 1) if n % 2 == 0 else ((n - 1) // 2, 2)
    elif kind == "D":
        genus, boundary = ((n - 2) // 2, 3) if n % 2 == 0 else ((n - 1) // 2, 2)
    else:
        raise GraphError(f"No closed form for type {kind!r}")
    return SurfaceType(genus=genus, boundary=boundary, chi=2 - 2 * genus - boundary)


# ---------------------------------------------------------------------------
# homology action


@dataclass(frozen=True)
class TransvectionRep:
    rank: int
    pairing: np.ndarray
    twists: Tuple[np.ndarray, ...]
    curve_graph: CurveGraph

    def twist(self, i: int) -> np.ndarray:
        if not 1 <= i <= self.rank:
            raise WordError(f"Curve index {i} outside 1..{self.rank}")
        return self.twists[i - 1]

    def check_relations(self) -> Dict[str, bool]:
        """Pairing preservation, commutation and braid relations, exactly."""
        J = self.pairing
        symplectic = all(np.array_equal(M.T @ J @ M, J) for M in self.twists)
        commute = True
        braid = True
        for i in range(1, self.rank + 1):
            for j in range(i + 1, self.rank + 1):
                Mi, Mj = self.twist(i), self.twist(j)
                if self.curve_graph.intersection(i, j) == 0:
                    commute &= np.array_equal(Mi @ Mj, Mj @ Mi)
                else:
                    braid &= np.array_equal(Mi @ Mj @ Mi, Mj @ Mi @ Mj)
        return {"symplectic": bool(symplectic), "commutation": bool(commute), "braid": bool(braid)}


def transvection_rep(cg: CurveGraph) -> TransvectionRep:
    """Twist matrices x ↦ x + ⟨a, x⟩a on the lattice spanned by the curve classes.

    Orientation convention: ⟨a_i, a_j⟩ = +1 for i < j whenever the curves meet.
    """
    if any(mult != 1 for _, _, mult in cg.intersections):
        raise GraphError("Transvection representation supports unit intersections only")
    v = cg.size
    J = np.zeros((v, v), dtype=np.int64)
    for i, j, _ in cg.intersections:
        J[i - 1, j - 1] = 1
        J[j - 1, i - 1] = -1
    twists = []
    for a in range(v):
        M = np.eye(v, dtype=np.int64)
        M[a, :] += J[a, :]
        twists.append(M)
    rep = TransvectionRep(rank=v, pairing=J, twists=tuple(twists), curve_graph=cg)
    report = rep.check_relations()
    if not all(report.values()):
        raise ArithmeticError(f"Transvection matrices violate {report}")
    return rep


def _checked_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    bound = int(np.abs(A).max()) * int(np.abs(B).max()) * A.shape[1]
    if bound >= MATRIX_ENTRY_LIMIT:
        raise MatrixOverflowError("Twist product entries would exceed the int64 range")
    return A @ B


def evaluate_word(rep: TransvectionRep, w: PositiveWord) -> np.ndarray:
    """Ordered product of the twist matrices of ``w``; identity for the empty word."""
    result = np.eye(rep.rank, dtype=np.int64)
    for s in w.letters:
        result = _checked_matmul(result, rep.twist(s))
    return result


def act_on_class(rep: TransvectionRep, w: PositiveWord, vector: Sequence[int]) -> np.ndarray:
    """Image of a homology class (coordinates in the curve basis) under ``w``."""
    vec = np.asarray(vector, dtype=np.int64)
    if vec.shape != (rep.rank,):
        raise WordError(f"Class vector must have {rep.rank} coordinates")
    return _checked_matmul(evaluate_word(rep, w), vec.reshape(-1, 1)).reshape(-1)


def separates(rep: TransvectionRep, u: PositiveWord, v: PositiveWord) -> bool:
    """True when the matrices differ, which certifies u ≠ v.  Equal matrices prove nothing."""
    return not np.array_equal(evaluate_word(rep, u), evaluate_word(rep, v))
