import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from app.artin import parse_word, word, words_equal
from app.coxeter import type_a, type_d, type_i2
from app.errors import GraphError, MatrixOverflowError, WordError
from app.surface import (
    CurveGraph,
    SurfaceType,
    act_on_class,
    chain_graph,
    closed_form_surface,
    curve_graph_from_coxeter,
    d_graph,
    evaluate_word,
    separates,
    surface_of,
    transvection_rep,
)


def random_tree(n, rng):
    if n == 1:
        return CurveGraph(curves=("a_1",))
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(prufer) if n > 2 else nx.path_graph(2)
    pairs = sorted((min(u, v) + 1, max(u, v) + 1, 1) for u, v in tree.edges)
    return CurveGraph(curves=tuple(f"a_{i}" for i in range(1, n + 1)), intersections=tuple(pairs))


def test_curve_graph_builders():
    assert chain_graph(2).intersections == ((1, 2, 1),)
    assert len(chain_graph(5).intersections) == 4
    d4 = d_graph(4)
    assert [d4.intersection(2, j) for j in (1, 3, 4)] == [1, 1, 1]
    assert d4.intersection(1, 3) == 0
    with pytest.raises(GraphError):
        chain_graph(0)
    with pytest.raises(GraphError):
        d_graph(3)


def test_curve_graph_from_coxeter():
    assert curve_graph_from_coxeter(type_a(3)) == chain_graph(3)
    assert curve_graph_from_coxeter(type_d(5)) == d_graph(5)
    assert curve_graph_from_coxeter(type_i2(3)) == chain_graph(2)
    with pytest.raises(GraphError):
        curve_graph_from_coxeter(type_i2(4))


@pytest.mark.parametrize(
    "cg, expected",
    [(chain_graph(4), (2, 1, -3)), (chain_graph(5), (2, 2, -4)), (d_graph(4), (1, 3, -3)),
     (chain_graph(1), (0, 2, 0)), (chain_graph(2), (1, 1, -1))],
)
def test_surface_examples(cg, expected):
    s = surface_of(cg)
    assert (s.genus, s.boundary, s.chi) == expected


@pytest.mark.parametrize("n", range(2, 13))
def test_chain_neighborhood_matches_closed_form(n):
    assert surface_of(chain_graph(n)) == closed_form_surface("A", n)


@pytest.mark.parametrize("n", range(4, 13))
def test_d_neighborhood_matches_closed_form(n):
    assert surface_of(d_graph(n)) == closed_form_surface("D", n)


def test_random_trees_and_plumbing_orders(rng):
    for _ in range(100):
        cg = random_tree(rng.randint(1, 12), rng)
        base = surface_of(cg)
        assert base.chi == -len(cg.intersections)
        for _ in range(20):
            assert surface_of(cg, rng=random.Random(rng.randrange(2 ** 32))) == base


def test_surface_rejects_non_trees():
    triangle = CurveGraph(curves=("a_1", "a_2", "a_3"), intersections=((1, 2, 1), (1, 3, 1), (2, 3, 1)))
    with pytest.raises(GraphError):
        surface_of(triangle)
    with pytest.raises(GraphError):
        surface_of(CurveGraph(curves=("a_1", "a_2"), intersections=((1, 2, 2),)))
    with pytest.raises(GraphError):
        surface_of(CurveGraph(curves=("a_1", "a_2")))


def test_surface_type_enforces_euler_formula():
    with pytest.raises(ValidationError):
        SurfaceType(genus=1, boundary=1, chi=0)


def test_closed_form_unknown_family():
    with pytest.raises(GraphError):
        closed_form_surface("E", 6)


@pytest.mark.parametrize("cg", [chain_graph(n) for n in range(1, 8)] + [d_graph(n) for n in range(4, 8)])
def test_transvections_satisfy_twist_relations(cg):
    rep = transvection_rep(cg)
    assert rep.check_relations() == {"symplectic": True, "commutation": True, "braid": True}
    for i in range(1, cg.size + 1):
        for j in range(1, cg.size + 1):
            if i != j and cg.intersection(i, j) == 0:
                unit = np.zeros(cg.size, dtype=np.int64)
                unit[j - 1] = 1
                assert np.array_equal(rep.twist(i) @ unit, unit)


def test_transvection_examples():
    g = type_a(2)
    rep = transvection_rep(chain_graph(2))
    assert np.array_equal(evaluate_word(rep, parse_word(g, "1 2 1")), evaluate_word(rep, parse_word(g, "2 1 2")))
    assert act_on_class(rep, word(g, [1]), [0, 1]).tolist() == [1, 1]
    assert np.array_equal(evaluate_word(rep, word(g, [])), np.eye(2, dtype=np.int64))
    with pytest.raises(WordError):
        act_on_class(rep, word(g, [1]), [1, 0, 0])

    rep3 = transvection_rep(chain_graph(3))
    assert np.array_equal(rep3.twist(1) @ rep3.twist(3), rep3.twist(3) @ rep3.twist(1))
    a3 = type_a(3)
    assert separates(rep3, parse_word(a3, "1 2"), parse_word(a3, "2 1"))


def test_evaluate_word_rejects_foreign_letters():
    rep = transvection_rep(chain_graph(2))
    with pytest.raises(WordError):
        evaluate_word(rep, word(type_a(3), [3]))


def test_long_products_refuse_to_overflow():
    rep = transvection_rep(chain_graph(2))
    w = parse_word(type_a(2), "1 1 1 2 2 2") ** 30
    with pytest.raises(MatrixOverflowError):
        evaluate_word(rep, w)


A4_REP = transvection_rep(chain_graph(4))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=9), st.data())
@settings(max_examples=200, deadline=None)
def test_separation_is_sound(u, data):
    g = type_a(4)
    v = data.draw(st.lists(st.integers(1, 4), min_size=len(u), max_size=len(u)))
    U, V = word(g, u), word(g, v)
    if separates(A4_REP, U, V):
        assert not words_equal(U, V)
    if words_equal(U, V):
        assert not separates(A4_REP, U, V)
