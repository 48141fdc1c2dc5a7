import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.coxeter import (
    INFINITY,
    GraphKind,
    build_graph,
    coxeter_element_order,
    coxeter_matrix,
    coxeter_number,
    custom_graph,
    element_from_word,
    enumerate_group,
    generator,
    graph_from_spec,
    identity,
    inverse,
    is_identity,
    left_descents,
    length,
    longest_element,
    multiply,
    reduced_word,
    right_descents,
    type_a,
    type_d,
    type_i2,
)
from app.errors import GraphError, WordError


def test_build_catalog_shapes():
    assert build_graph("A", 3).edges == ((1, 2, 3), (2, 3, 3))
    assert build_graph("I2", label=3).edges == ((1, 2, 3),)
    d4 = build_graph(GraphKind.D, 4)
    assert d4.neighbors(2) == (1, 3, 4)
    assert d4.name == "D4"


@pytest.mark.parametrize("kind, rank, label", [("D", 3, None), ("I2", None, 2), ("A", 0, None), ("E", 6, None)])
def test_build_rejects_out_of_range(kind, rank, label):
    with pytest.raises(GraphError):
        build_graph(kind, rank, label)


@pytest.mark.parametrize(
    "edges",
    [[(1, 1, 3)], [(1, 2, 2)], [(1, 4, 3)], [(1, 2, 3), (2, 1, 4)], [(1, 2)], [5], 5, "1 2 3", [{"i": 1}]],
)
def test_custom_graph_rejects_malformed_edges(edges):
    with pytest.raises(GraphError):
        custom_graph(3, edges)


def test_graph_from_spec_custom_with_infinity():
    g = graph_from_spec({"type": "custom", "rank": 3, "edges": [[1, 2, "inf"], [2, 3, 4]]})
    assert g.has_infinity
    assert g.m(1, 2) == INFINITY
    assert g.m(1, 3) == 2
    assert not g.is_catalog
    assert graph_from_spec(g.to_spec()) == g


def test_coxeter_matrix():
    assert coxeter_matrix(type_a(2)) == ((1, 3), (3, 1))
    assert coxeter_matrix(type_i2(5)) == ((1, 5), (5, 1))
    assert coxeter_matrix(type_a(3))[0][2] == 2


def test_generators_are_involutions(a2, d4, i2_5):
    for g in (a2, d4, i2_5):
        for s in g.generators():
            assert is_identity(multiply(generator(g, s), generator(g, s)))


def test_small_lengths_and_descents(a2, d4):
    assert length(element_from_word(a2, [1, 2, 1])) == 3
    assert left_descents(identity(a2)) == frozenset()
    assert left_descents(element_from_word(d4, [2, 1])) == frozenset({2})
    assert right_descents(element_from_word(d4, [2, 1])) == frozenset({1})


def test_mixing_graphs_rejected(a2, a3):
    with pytest.raises(WordError):
        multiply(generator(a2, 1), generator(a3, 1))


@pytest.mark.parametrize(
    "g, order",
    [(type_a(2), 6), (type_a(3), 24), (type_d(4), 192), (type_i2(5), 10), (type_i2(8), 16)],
)
def test_group_orders(g, order):
    assert len(enumerate_group(g)) == order


@pytest.mark.parametrize("g", [type_a(3), type_d(4), type_d(5), type_i2(3), type_i2(6), type_i2(7)])
def test_length_matches_breadth_first_distance(g):
    for w, dist in enumerate_group(g, limit=2000).items():
        assert length(w) == dist
        assert length(inverse(w)) == dist
        assert len(reduced_word(w)) == dist
        assert element_from_word(g, reduced_word(w)) == w


@pytest.mark.parametrize(
    "g, top",
    [(type_a(4), 10), (type_d(4), 12), (type_d(5), 20), (type_i2(7), 7)],
)
def test_longest_element(g, top):
    w0 = longest_element(g)
    assert length(w0) == top
    assert left_descents(w0) == frozenset(g.generators())


@pytest.mark.parametrize("n", range(1, 9))
def test_coxeter_number_type_a(n):
    assert coxeter_number(type_a(n)) == n + 1


@pytest.mark.parametrize("n", range(4, 9))
def test_coxeter_number_type_d(n):
    assert coxeter_number(type_d(n)) == 2 * n - 2


@pytest.mark.parametrize("m", range(3, 9))
def test_coxeter_number_dihedral(m):
    assert coxeter_number(type_i2(m)) == m


@pytest.mark.parametrize("g", [type_a(4), type_d(4), type_d(5)])
def test_all_coxeter_elements_have_the_same_order(g):
    h = coxeter_number(g)
    for ordering in itertools.permutations(g.generators()):
        assert coxeter_element_order(g, ordering) == h


def test_coxeter_number_needs_finite_catalog():
    with pytest.raises(GraphError):
        coxeter_number(custom_graph(2, [(1, 2, "inf")]))


d5 = type_d(5)


@given(st.lists(st.integers(1, 5), max_size=14), st.lists(st.integers(1, 5), max_size=14))
@settings(max_examples=200, deadline=None)
def test_group_axioms_signed_permutations(u, v):
    a, b = element_from_word(d5, u), element_from_word(d5, v)
    for x in (a, b, multiply(a, b)):
        assert sum(p < 0 for p in x.data) % 2 == 0
    assert is_identity(multiply(a, inverse(a)))
    assert inverse(multiply(a, b)) == multiply(inverse(b), inverse(a))
    assert length(multiply(a, b)) <= length(a) + length(b)
    assert length(a) % 2 == len(u) % 2
    for s in d5.generators():
        shorter = length(multiply(generator(d5, s), a)) < length(a)
        assert (s in left_descents(a)) == shorter
