import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxindep.constructions import build_F
from maxindep.counting import count_mis, independence_number
from maxindep.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    is_connected,
    is_cutvertex,
    make_graph,
    path_graph,
    star_graph,
)
from maxindep.transform import (
    TransformError,
    best_anchor,
    make_true_twin,
    moon_moser_saturate,
    reduce_edges,
    reduce_edges_trace,
    saturate,
)

from oracles import brute_mis, random_connected_graph


def test_best_anchor_examples():
    assert best_anchor(path_graph(4)) == 0
    assert best_anchor(cycle_graph(5)) == 0
    assert best_anchor(star_graph(5)) == 1
    with pytest.raises(TransformError):
        best_anchor(empty_graph(2))


def test_make_true_twin_on_c4():
    c4 = cycle_graph(4)
    g = make_true_twin(c4, 0, 1)
    assert g.edges() == [(0, 1), (0, 3), (1, 3), (2, 3)]
    assert g.closed_mask(0) == g.closed_mask(1)
    assert brute_mis(g)[:2] == (2, 2)


def test_make_true_twin_idempotent_and_errors():
    g = make_true_twin(cycle_graph(4), 0, 1)
    assert make_true_twin(g, 0, 1) is g
    assert make_true_twin(g, 0, 0) is g
    with pytest.raises(TransformError):
        make_true_twin(cycle_graph(4), 0, 2)
    with pytest.raises(TransformError):
        make_true_twin(path_graph(3), 0, 1)


def test_c5_saturation():
    c5 = cycle_graph(5)
    assert count_mis(c5).num_mis == 5
    steps = moon_moser_saturate(c5)
    assert steps[0].x == 0 and steps[0].N == {4, 0, 1}
    assert count_mis(steps[0].after).num_mis == 5
    final = saturate(c5)
    assert count_mis(final).alpha == 2


def test_saturate_leaves_complete_graph_alone():
    assert moon_moser_saturate(complete_graph(5)) == []
    assert saturate(complete_graph(5)) == complete_graph(5)


def check_saturation(g):
    steps = moon_moser_saturate(g)
    alpha = independence_number(g)
    for s in steps:
        before = count_mis(s.before, per_vertex=True)
        after = count_mis(s.after)
        assert is_connected(s.after)
        assert after.alpha == alpha
        assert after.num_mis == before.num_mis + before.per_vertex[s.x] - before.per_vertex[s.y]
        assert after.num_mis >= before.num_mis
        assert all(before.per_vertex[s.x] >= before.per_vertex[u] for u in s.N)
        assert s.after.closed_mask(s.y) == s.after.closed_mask(s.x)
    final = steps[-1].after if steps else g
    if steps:
        x = steps[0].x
        for y in steps[0].N:
            assert final.closed_mask(y) == final.closed_mask(x) or is_cutvertex(final, y)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32))
def test_saturation_invariants(n, seed):
    check_saturation(random_connected_graph(random.Random(seed), n))


def test_reduce_edges_examples():
    for n, alpha in [(6, 2), (9, 3), (7, 4)]:
        f = build_F(n, alpha)
        assert reduce_edges(f, 0) == f
    tree = make_graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert reduce_edges(tree) == tree
    # K4 on {0,1,2,3} with pendant 4 on 3 and extra edge 2-4
    g = make_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (2, 4)])
    out, removed = reduce_edges_trace(g, 0)
    assert removed == [(2, 4)]
    assert out.num_edges() == 7 and independence_number(out) == 2


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32))
def test_reduce_edges_invariants(n, seed):
    g = random_connected_graph(random.Random(seed), n)
    x = best_anchor(g)
    out, removed = reduce_edges_trace(g, x)
    assert is_connected(out)
    assert independence_number(out) == independence_number(g)
    assert set(out.edges()) | set(removed) == set(g.edges())
    closed = g.closed_mask(x)
    for u, v in removed:
        assert (closed >> u & 1) != (closed >> v & 1)
    assert reduce_edges(out, x) == out
