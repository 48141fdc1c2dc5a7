"""Coxeter graphs and concrete finite Coxeter groups of types A, D and I_2.

Elements are stored exactly:

* ``A_n``: permutations of ``1..n+1`` in one-line notation, ``s_i = (i, i+1)``.
* ``D_n``: even-signed permutations of ``1..n``.  Internally the classical
  signed-permutation convention (fork at the *start* of the path) is used, so
  generator ``s_j`` (``j < n``) is the position swap ``(n-j, n-j+1)`` and
  ``s_n`` is the signed swap of positions 1, 2.  This puts the fork of the
  graph at ``s_{n-2}`` joined to ``s_{n-1}`` and ``s_n``.
* ``I_2(m)``: pairs ``(rotation mod m, reflection bit)`` with ``s = (0, 1)``
  and ``t = (1, 1)``.

Products compose right to left as functions: ``(a*b)(i) = a(b(i))``.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr

from .errors import GraphError, WordError

logger = logging.getLogger(__name__)

# label used for m_st = infinity in matrices and edge lists
INFINITY = 0


class GraphKind(str, Enum):
    A = "A"
    D = "D"
    I2 = "I2"
    CUSTOM = "custom"


class CoxeterGraph(BaseModel):
    """Labeled graph defining W(Γ), A(Γ) and A⁺(Γ).

    Vertices are the generators ``s_1..s_rank``; ``edges`` lists ``(i, j, m)``
    with ``i < j`` and ``m >= 3`` (or ``INFINITY``).  Pairs that are not listed
    commute (``m = 2``).  Build instances through :func:`build_graph` or the
    catalog helpers; they validate the edge list.
    """

    model_config = ConfigDict(frozen=True)

    kind: GraphKind
    rank: int
    label: Optional[int] = None
    edges: Tuple[Tuple[int, int, int], ...] = ()

    _matrix: Tuple[Tuple[int, ...], ...] = PrivateAttr()
    _neighbors: Tuple[Tuple[int, ...], ...] = PrivateAttr()

    def model_post_init(self, __context) -> None:
        n = self.rank
        rows = [[2] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        for i, j, m in self.edges:
            rows[i - 1][j - 1] = m
            rows[j - 1][i - 1] = m
        self._matrix = tuple(tuple(r) for r in rows)
        # neighbors = generators with any relation other than commutation
        self._neighbors = tuple(
            tuple(j + 1 for j in range(n) if j != i and rows[i][j] != 2) for i in range(n)
        )

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(f"s_{i}" for i in range(1, self.rank + 1))

    @property
    def name(self) -> str:
        if self.kind == GraphKind.I2:
            return f"I2({self.label})"
        if self.kind == GraphKind.CUSTOM:
            return f"custom{self.rank}"
        return f"{self.kind.value}{self.rank}"

    @property
    def is_catalog(self) -> bool:
        return self.kind != GraphKind.CUSTOM

    @property
    def has_infinity(self) -> bool:
        return any(m == INFINITY for _, _, m in self.edges)

    def m(self, i: int, j: int) -> int:
        """Coxeter label m_ij (``INFINITY`` encodes ∞)."""
        return self._matrix[i - 1][j - 1]

    def neighbors(self, i: int) -> Tuple[int, ...]:
        return self._neighbors[i - 1]

    def generators(self) -> range:
        return range(1, self.rank + 1)

    def to_spec(self) -> dict:
        if self.kind == GraphKind.I2:
            return {"type": "I2", "rank": 2, "label": self.label}
        if self.kind == GraphKind.CUSTOM:
            return {
                "type": "custom",
                "rank": self.rank,
                "edges": [[i, j, "inf" if m == INFINITY else m] for i, j, m in self.edges],
            }
        return {"type": self.kind.value, "rank": self.rank}


def _validate_edges(rank: int, edges: Iterable[Sequence]) -> Tuple[Tuple[int, int, int], ...]:
    if not isinstance(edges, (list, tuple)):
        raise GraphError(f"Edge list must be a list of [i, j, m] triples, got {edges!r}")
    seen = set()
    result = []
    for edge in edges:
        if not isinstance(edge, (list, tuple)) or len(edge) != 3:
            raise GraphError(f"Edge {edge!r} must be a triple [i, j, m]")
        i, j, m = edge
        if m in ("inf", "infinity", float("inf")):
            m = INFINITY
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j, m)):
            raise GraphError(f"Edge {edge!r} must contain integers")
        if i == j:
            raise GraphError(f"Self-loop on vertex {i}")
        if not (1 <= i <= rank and 1 <= j <= rank):
            raise GraphError(f"Edge {edge!r} references a vertex outside 1..{rank}")
        if m != INFINITY and m < 3:
            raise GraphError(f"Edge label must be >= 3 or infinity, got {m}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphError(f"Duplicate edge between {key[0]} and {key[1]}")
        seen.add(key)
        result.append((key[0], key[1], m))
    return tuple(sorted(result))


def type_a(n: int) -> CoxeterGraph:
    if n < 1:
        raise GraphError(f"A_n requires n >= 1, got {n}")
    return CoxeterGraph(kind=GraphKind.A, rank=n, edges=tuple((i, i + 1, 3) for i in range(1, n)))


def type_d(n: int) -> CoxeterGraph:
    if n < 4:
        raise GraphError(f"D_n requires n >= 4, got {n}")
    edges = [(i, i + 1, 3) for i in range(1, n - 2)]
    edges += [(n - 2, n - 1, 3), (n - 2, n, 3)]
    return CoxeterGraph(kind=GraphKind.D, rank=n, edges=tuple(sorted(edges)))


def type_i2(m: int) -> CoxeterGraph:
    if m < 3:
        raise GraphError(f"I_2(m) requires m >= 3, got {m}")
    return CoxeterGraph(kind=GraphKind.I2, rank=2, label=m, edges=((1, 2, m),))


def custom_graph(rank: int, edges: Iterable[Sequence]) -> CoxeterGraph:
    if rank < 1:
        raise GraphError(f"A graph needs at least one vertex, got rank {rank}")
    return CoxeterGraph(kind=GraphKind.CUSTOM, rank=rank, edges=_validate_edges(rank, edges))


def build_graph(kind: str, rank: Optional[int] = None, label: Optional[int] = None,
                edges: Optional[Iterable[Sequence]] = None) -> CoxeterGraph:
    """Build a catalog graph (A, D, I2) or a custom graph from an edge list."""
    if isinstance(kind, GraphKind):
        kind = kind.value
    kind = str(kind).upper() if str(kind).lower() != "custom" else "custom"
    if kind == "A":
        return type_a(_require_int(rank, "rank"))
    if kind == "D":
        return type_d(_require_int(rank, "rank"))
    if kind == "I2":
        return type_i2(_require_int(label, "label"))
    if kind == "custom":
        if edges is None:
            raise GraphError("Custom graphs need an edge list")
        return custom_graph(_require_int(rank, "rank"), edges)
    raise GraphError(f"Unknown graph type {kind!r}")


def graph_from_spec(spec: dict) -> CoxeterGraph:
    """Graph from the JSON file format ``{"type", "rank", "label", "edges"}``."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise GraphError("Graph spec must be an object with a 'type' field")
    return build_graph(spec["type"], rank=spec.get("rank"), label=spec.get("label"),
                       edges=spec.get("edges"))


def _require_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise GraphError(f"Graph spec needs an integer {name}, got {value!r}")
    return value


def coxeter_matrix(g: CoxeterGraph) -> Tuple[Tuple[int, ...], ...]:
    """Symmetric Coxeter matrix M = (m_ij); ``INFINITY`` (0) encodes ∞."""
    return tuple(tuple(g.m(i, j) for j in g.generators()) for i in g.generators())


# ---------------------------------------------------------------------------
# group elements


@dataclass(frozen=True)
class CoxeterElement:
    graph: CoxeterGraph = field(compare=False, hash=False, repr=False)
    tag: GraphKind
    data: Tuple[int, ...]

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"CoxeterElement({self.graph.name}, {reduced_word(self)})"


def _require_catalog(g: CoxeterGraph) -> None:
    if not g.is_catalog:
        raise GraphError(f"Group arithmetic is only available for catalog graphs, not {g.name}")


def identity(g: CoxeterGraph) -> CoxeterElement:
    _require_catalog(g)
    if g.kind == GraphKind.A:
        return CoxeterElement(g, g.kind, tuple(range(1, g.rank + 2)))
    if g.kind == GraphKind.D:
        return CoxeterElement(g, g.kind, tuple(range(1, g.rank + 1)))
    return CoxeterElement(g, g.kind, (0, 0))


def generator(g: CoxeterGraph, i: int) -> CoxeterElement:
    _require_catalog(g)
    if not 1 <= i <= g.rank:
        raise WordError(f"Generator index {i} outside 1..{g.rank} for {g.name}")
    if g.kind == GraphKind.A:
        data = list(range(1, g.rank + 2))
        data[i - 1], data[i] = data[i], data[i - 1]
        return CoxeterElement(g, g.kind, tuple(data))
    if g.kind == GraphKind.D:
        n = g.rank
        data = list(range(1, n + 1))
        if i == n:
            data[0], data[1] = -2, -1
        else:
            p = n - i
            data[p - 1], data[p] = data[p], data[p - 1]
        return CoxeterElement(g, g.kind, tuple(data))
    return CoxeterElement(g, g.kind, (0, 1) if i == 1 else (1, 1))


def _check_same(a: CoxeterElement, b: CoxeterElement) -> None:
    if a.graph is not b.graph and a.graph != b.graph:
        raise WordError(f"Cannot combine elements of {a.graph.name} and {b.graph.name}")


def multiply(a: CoxeterElement, b: CoxeterElement) -> CoxeterElement:
    _check_same(a, b)
    if a.tag == GraphKind.A:
        ad = a.data
        return CoxeterElement(a.graph, a.tag, tuple(ad[v - 1] for v in b.data))
    if a.tag == GraphKind.D:
        ad = a.data
        return CoxeterElement(
            a.graph, a.tag, tuple(ad[v - 1] if v > 0 else -ad[-v - 1] for v in b.data)
        )
    m = a.graph.label
    ra, fa = a.data
    rb, fb = b.data
    return CoxeterElement(a.graph, a.tag, ((ra - rb if fa else ra + rb) % m, fa ^ fb))


def inverse(a: CoxeterElement) -> CoxeterElement:
    if a.tag == GraphKind.I2:
        r, f = a.data
        return a if f else CoxeterElement(a.graph, a.tag, ((-r) % a.graph.label, 0))
    inv = [0] * len(a.data)
    for pos, v in enumerate(a.data, start=1):
        if v > 0:
            inv[v - 1] = pos
        else:
            inv[-v - 1] = -pos
    return CoxeterElement(a.graph, a.tag, tuple(inv))


def length(a: CoxeterElement) -> int:
    """Coxeter length: inversions (A), inv + nsp (D), closed form (I_2)."""
    d = a.data
    if a.tag == GraphKind.A:
        return sum(1 for i in range(len(d)) for j in range(i + 1, len(d)) if d[i] > d[j])
    if a.tag == GraphKind.D:
        total = 0
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[i] > d[j]:
                    total += 1
                if d[i] + d[j] < 0:
                    total += 1
        return total
    m = a.graph.label
    r, f = d
    if not f:
        return 2 * min(r, m - r)
    return min(2 * ((-r) % m) + 1, 2 * ((r - 1) % m) + 1)


def right_descents(a: CoxeterElement) -> FrozenSet[int]:
    """Generators s with length(a·s) < length(a)."""
    d = a.data
    if a.tag == GraphKind.A:
        return frozenset(i for i in range(1, len(d)) if d[i - 1] > d[i])
    if a.tag == GraphKind.D:
        n = len(d)
        result = {n - i for i in range(1, n) if d[i - 1] > d[i]}
        if d[0] + d[1] < 0:
            result.add(n)
        return frozenset(result)
    base = length(a)
    return frozenset(s for s in (1, 2) if length(multiply(a, generator(a.graph, s))) < base)


def left_descents(a: CoxeterElement) -> FrozenSet[int]:
    """Generators s with length(s·a) < length(a)."""
    if a.tag == GraphKind.I2:
        base = length(a)
        return frozenset(s for s in (1, 2) if length(multiply(generator(a.graph, s), a)) < base)
    return right_descents(inverse(a))


def is_identity(a: CoxeterElement) -> bool:
    if a.tag == GraphKind.I2:
        return a.data == (0, 0)
    return all(v == i for i, v in enumerate(a.data, start=1))


def element_from_word(g: CoxeterGraph, letters: Iterable[int]) -> CoxeterElement:
    w = identity(g)
    for s in letters:
        w = multiply(w, generator(g, s))
    return w


def reduced_word(a: CoxeterElement) -> Tuple[int, ...]:
    """Lexicographically first reduced word (strip the smallest left descent)."""
    letters: List[int] = []
    w = a
    while True:
        descents = left_descents(w)
        if not descents:
            return tuple(letters)
        s = min(descents)
        letters.append(s)
        w = multiply(generator(a.graph, s), w)


def longest_element(g: CoxeterGraph) -> CoxeterElement:
    """The longest element w_0 (image of the Garside element Δ)."""
    w = identity(g)
    while True:
        ascents = [s for s in g.generators() if s not in right_descents(w)]
        if not ascents:
            return w
        w = multiply(w, generator(g, ascents[0]))


def element_order(a: CoxeterElement) -> int:
    order = 1
    w = a
    while not is_identity(w):
        w = multiply(w, a)
        order += 1
    return order


def coxeter_element_order(g: CoxeterGraph, ordering: Optional[Sequence[int]] = None) -> int:
    """Order of the product of all generators taken in ``ordering``."""
    _require_finite_catalog(g)
    ordering = list(ordering) if ordering is not None else list(g.generators())
    if sorted(ordering) != list(g.generators()):
        raise GraphError(f"Ordering {ordering} is not a permutation of the generators")
    return element_order(element_from_word(g, ordering))


def coxeter_number(g: CoxeterGraph) -> int:
    """Order of a Coxeter element; n+1 for A_n, 2n-2 for D_n, m for I_2(m)."""
    h = coxeter_element_order(g)
    expected = {GraphKind.A: g.rank + 1, GraphKind.D: 2 * g.rank - 2}.get(g.kind, g.label)
    if h != expected:
        # the closed forms are theorems; a mismatch means the arithmetic is broken
        raise ArithmeticError(f"Coxeter number of {g.name} computed as {h}, expected {expected}")
    return h


def _require_finite_catalog(g: CoxeterGraph) -> None:
    if not g.is_catalog or g.has_infinity:
        raise GraphError(f"{g.name} is not an irreducible finite-type catalog graph")


def enumerate_group(g: CoxeterGraph, limit: int = 10_000) -> Dict[CoxeterElement, int]:
    """Breadth-first enumeration of W(Γ): element -> minimal word length."""
    start = identity(g)
    dist = {start: 0}
    queue = deque([start])
    gens = [generator(g, s) for s in g.generators()]
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = multiply(w, s)
            if ws not in dist:
                dist[ws] = dist[w] + 1
                if len(dist) > limit:
                    raise GraphError(f"W({g.name}) has more than {limit} elements")
                queue.append(ws)
    logger.debug("Enumerated %d elements of W(%s)", len(dist), g.name)
    return dist
