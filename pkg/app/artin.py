"""Positive words in the Artin monoid A⁺(Γ).

Equality is decided by the left-greedy normal form whose factors are simple
elements, i.e. elements of the finite Coxeter group W(Γ) lifted by any
reduced word.  A brute-force rewriting oracle applies the defining relations
``prod(s,t;m) <-> prod(t,s;m)`` directly and is used to cross-check the
normal-form engine.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .config import DEFAULT_ORACLE_BUDGET
from .coxeter import (
    INFINITY,
    CoxeterElement,
    CoxeterGraph,
    generator,
    is_identity,
    left_descents,
    longest_element,
    multiply,
    reduced_word,
    right_descents,
)
from .errors import GraphError, PreconditionError, WordError

logger = logging.getLogger(__name__)

# guard for subword reversing; finite-type reversing always terminates well below this
MAX_REVERSING_STEPS = 1_000_000


@dataclass(frozen=True)
class PositiveWord:
    graph: CoxeterGraph = field(repr=False)
    letters: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "PositiveWord") -> "PositiveWord":
        _same_graph(self, other)
        return PositiveWord(self.graph, self.letters + other.letters)

    def __pow__(self, exponent: int) -> "PositiveWord":
        if exponent < 0:
            raise WordError("Positive words have no negative powers")
        return PositiveWord(self.graph, self.letters * exponent)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.letters)


def word(g: CoxeterGraph, letters: Iterable[int] = ()) -> PositiveWord:
    letters = tuple(letters)
    for s in letters:
        if not isinstance(s, int) or isinstance(s, bool) or not 1 <= s <= g.rank:
            raise WordError(f"Letter {s!r} is not a generator of {g.name} (1..{g.rank})")
    return PositiveWord(g, letters)


def parse_word(g: CoxeterGraph, text: str) -> PositiveWord:
    """Parse ``"1 2 1"``; the empty string is the identity."""
    try:
        letters = [int(tok) for tok in text.split()]
    except ValueError:
        raise WordError(f"Word literal {text!r} must be whitespace-separated generator indices")
    return word(g, letters)


def _same_graph(u: PositiveWord, v: PositiveWord) -> None:
    if u.graph is not v.graph and u.graph != v.graph:
        raise WordError(f"Words over different graphs: {u.graph.name} and {v.graph.name}")


def prod_word(a: PositiveWord, b: PositiveWord, l: int) -> PositiveWord:
    """prod(a,b;l) = a b a ⋯ with l alternating factors."""
    _same_graph(a, b)
    if l < 1:
        raise WordError(f"prod(a,b;l) needs l >= 1, got {l}")
    letters: List[int] = []
    for i in range(l):
        letters.extend(a.letters if i % 2 == 0 else b.letters)
    return PositiveWord(a.graph, tuple(letters))


def _alternating(s: int, t: int, l: int) -> Tuple[int, ...]:
    return tuple(s if i % 2 == 0 else t for i in range(l))


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class NormalForm:
    graph: CoxeterGraph = field(repr=False)
    factors: Tuple[CoxeterElement, ...] = ()

    @property
    def letter_count(self) -> int:
        return sum(len(reduced_word(p)) for p in self.factors)

    @property
    def infimum(self) -> int:
        """Number of leading factors equal to Δ."""
        if not self.factors:
            return 0
        delta = longest_element(self.graph)
        count = 0
        for p in self.factors:
            if p != delta:
                break
            count += 1
        return count

    def to_word(self) -> PositiveWord:
        letters: List[int] = []
        for p in self.factors:
            letters.extend(reduced_word(p))
        return PositiveWord(self.graph, tuple(letters))

    def factor_words(self) -> List[Tuple[int, ...]]:
        return [reduced_word(p) for p in self.factors]


def _require_catalog(g: CoxeterGraph) -> None:
    if not g.is_catalog:
        raise GraphError(f"Normal forms are only available for catalog graphs (A, D, I2), not {g.name}")


def _left_weight_pair(p: CoxeterElement, q: CoxeterElement,
                      gens: Sequence[CoxeterElement]) -> Tuple[CoxeterElement, CoxeterElement]:
    # absorb left descents of q that are not right descents of p
    while True:
        movable = left_descents(q) - right_descents(p)
        if not movable:
            return p, q
        t = min(movable)
        p = multiply(p, gens[t])
        q = multiply(gens[t], q)


@lru_cache(maxsize=8192)
def normal_form(w: PositiveWord) -> NormalForm:
    """Left-greedy normal form of ``w``, built one letter at a time."""
    g = w.graph
    _require_catalog(g)
    gens = [None] + [generator(g, s) for s in g.generators()]
    factors: List[CoxeterElement] = []
    for s in w.letters:
        factors.append(gens[s])
        i = len(factors) - 2
        while i >= 0:
            head, tail = _left_weight_pair(factors[i], factors[i + 1], gens)
            unchanged = head == factors[i]
            factors[i], factors[i + 1] = head, tail
            if unchanged:
                break
            i -= 1
        while factors and is_identity(factors[-1]):
            factors.pop()
    return NormalForm(g, tuple(factors))


def words_equal(u: PositiveWord, v: PositiveWord) -> bool:
    """Equality in A⁺(Γ), hence in A(Γ) since A⁺(Γ) embeds in A(Γ)."""
    _same_graph(u, v)
    if len(u) != len(v):
        _require_catalog(u.graph)
        return False
    if u.letters == v.letters:
        _require_catalog(u.graph)
        return True
    return normal_form(u).factors == normal_form(v).factors


# ---------------------------------------------------------------------------
# rewriting oracle


class OracleVerdict(str, Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    BUDGET_EXCEEDED = "budget-exceeded"


def _relation_table(g: CoxeterGraph) -> Dict[int, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]]:
    table: Dict[int, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = {s: [] for s in g.generators()}
    for s in g.generators():
        for t in g.generators():
            if s == t:
                continue
            m = g.m(s, t)
            if m == INFINITY:
                continue
            table[s].append((_alternating(s, t, m), _alternating(t, s, m)))
    return table


def _rewrites(w: Tuple[int, ...], table) -> Iterator[Tuple[int, ...]]:
    n = len(w)
    for i, a in enumerate(w):
        for lhs, rhs in table[a]:
            m = len(lhs)
            if i + m <= n and w[i:i + m] == lhs:
                yield w[:i] + rhs + w[i + m:]


def brute_force_equal(u: PositiveWord, v: PositiveWord,
                      node_budget: int = DEFAULT_ORACLE_BUDGET) -> OracleVerdict:
    """Breadth-first closure of ``u`` under the defining relations.

    Exact whenever the closure finishes inside ``node_budget`` nodes; otherwise
    returns ``OracleVerdict.BUDGET_EXCEEDED``.
    """
    _same_graph(u, v)
    if node_budget < 1:
        raise PreconditionError(f"node_budget must be positive, got {node_budget}")
    if len(u) != len(v):
        return OracleVerdict.UNEQUAL
    target = v.letters
    if u.letters == target:
        return OracleVerdict.EQUAL
    table = _relation_table(u.graph)
    seen = {u.letters}
    queue = deque([u.letters])
    while queue:
        w = queue.popleft()
        for nxt in _rewrites(w, table):
            if nxt == target:
                return OracleVerdict.EQUAL
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > node_budget:
                    logger.info("Oracle budget of %d nodes exhausted on word of length %d",
                                node_budget, len(u))
                    return OracleVerdict.BUDGET_EXCEEDED
                queue.append(nxt)
    return OracleVerdict.UNEQUAL


# ---------------------------------------------------------------------------
# divisibility


def left_divides(s: int, w: PositiveWord) -> bool:
    """Whether s | w, i.e. w ≐ s·V for some positive V."""
    if not 1 <= s <= w.graph.rank:
        raise WordError(f"Letter {s} is not a generator of {w.graph.name}")
    nf = normal_form(w)
    if not nf.factors:
        return False
    return s in left_descents(nf.factors[0])


def left_quotient(s: int, w: PositiveWord) -> PositiveWord:
    """The word V with w ≐ s·V (canonical representative)."""
    if not left_divides(s, w):
        raise PreconditionError(f"Generator {s} does not left-divide {w}")
    nf = normal_form(w)
    head = multiply(generator(w.graph, s), nf.factors[0])
    letters: List[int] = list(reduced_word(head))
    for p in nf.factors[1:]:
        letters.extend(reduced_word(p))
    return PositiveWord(w.graph, tuple(letters))


def word_left_divides(u: PositiveWord, w: PositiveWord) -> bool:
    _same_graph(u, w)
    cur = w
    for s in u.letters:
        if not left_divides(s, cur):
            return False
        cur = left_quotient(s, cur)
    return True


def word_left_quotient(u: PositiveWord, w: PositiveWord) -> PositiveWord:
    """The word V with w ≐ u·V."""
    _same_graph(u, w)
    cur = w
    for s in u.letters:
        cur = left_quotient(s, cur)
    return cur


def reduction_step(s: int, t: int, X: PositiveWord, Y: PositiveWord) -> PositiveWord:
    """Witness W with X ≐ prod(t,s;m-1)·W and Y ≐ prod(s,t;m-1)·W, given s·X ≐ t·Y."""
    _same_graph(X, Y)
    g = X.graph
    sx = word(g, (s,)) * X
    ty = word(g, (t,)) * Y
    if not words_equal(sx, ty):
        raise PreconditionError(f"s·X and t·Y are not equal in A⁺({g.name}) (s={s}, t={t})")
    if s == t:
        return X
    m = g.m(s, t)
    x_prefix = PositiveWord(g, _alternating(t, s, m - 1))
    y_prefix = PositiveWord(g, _alternating(s, t, m - 1))
    witness = word_left_quotient(x_prefix, X)
    if not (words_equal(X, x_prefix * witness) and words_equal(Y, y_prefix * witness)):
        raise ArithmeticError(f"Reduction witness {witness} failed verification")
    return witness


# ---------------------------------------------------------------------------
# least common multiples


def _reverse(u: Tuple[int, ...], v: Tuple[int, ...], g: CoxeterGraph) -> Tuple[List[int], List[int]]:
    """Right-reverse u⁻¹v into P·N⁻¹; then u·P ≐ v·N is the right lcm."""
    # signed letters: (generator, -1) for inverse letters
    signed: List[Tuple[int, int]] = [(a, -1) for a in reversed(u)] + [(b, 1) for b in v]
    steps = 0
    while True:
        pos = next((i for i in range(len(signed) - 1)
                    if signed[i][1] < 0 and signed[i + 1][1] > 0), None)
        if pos is None:
            break
        steps += 1
        if steps > MAX_REVERSING_STEPS:
            raise ArithmeticError("Subword reversing did not terminate")
        s, t = signed[pos][0], signed[pos + 1][0]
        if s == t:
            replacement: List[Tuple[int, int]] = []
        else:
            m = g.m(s, t)
            replacement = [(a, 1) for a in _alternating(t, s, m - 1)]
            replacement += [(b, -1) for b in reversed(_alternating(s, t, m - 1))]
        signed[pos:pos + 2] = replacement
    positive = [a for a, sign in signed if sign > 0]
    negative = [a for a, sign in reversed(signed) if sign < 0]
    return positive, negative


def lcm_pair(u: PositiveWord, v: PositiveWord) -> PositiveWord:
    """Least common right multiple [u, v]."""
    _same_graph(u, v)
    g = u.graph
    _require_catalog(g)
    positive, negative = _reverse(u.letters, v.letters, g)
    result = u * PositiveWord(g, tuple(positive))
    if not words_equal(result, v * PositiveWord(g, tuple(negative))):
        raise ArithmeticError(f"Reversing produced inconsistent multiples of {u} and {v}")
    logger.debug("lcm(%s, %s) has length %d", u, v, len(result))
    return result


def delta_commuting(g: CoxeterGraph, T: Iterable[int]) -> PositiveWord:
    """Δ_T for a set T of pairwise commuting generators: their product."""
    gens = sorted(set(T))
    if not gens:
        raise PreconditionError("Δ_T needs a nonempty generator set")
    for s in gens:
        if not 1 <= s <= g.rank:
            raise WordError(f"Generator {s} outside 1..{g.rank}")
    for i, s in enumerate(gens):
        for t in gens[i + 1:]:
            if g.m(s, t) != 2:
                raise PreconditionError(f"Generators {s} and {t} do not commute in {g.name}")
    delta = PositiveWord(g, tuple(gens))
    reverse = PositiveWord(g, tuple(reversed(gens)))
    if g.is_catalog:
        same = words_equal(delta, reverse)
    else:
        same = brute_force_equal(delta, reverse) == OracleVerdict.EQUAL
    if not same:
        raise ArithmeticError(f"Product of commuting set {gens} depends on order")
    return delta
