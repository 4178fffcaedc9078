import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxindep.constructions import build_F, build_G
from maxindep.graph import (
    Graph,
    Graph6Error,
    GraphError,
    add_edge,
    cycle_graph,
    decode_graph6,
    empty_graph,
    encode_graph6,
    is_connected,
    is_cutvertex,
    make_graph,
    path_graph,
    remove_edge,
)
from maxindep.iso import are_isomorphic


def check_invariants(g: Graph) -> None:
    for v in range(g.n):
        assert v not in g.adj[v]
        for u in g.adj[v]:
            assert 0 <= u < g.n
            assert v in g.adj[u]


@st.composite
def graphs(draw, max_n=62):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if not pairs:
        return make_graph(n, [])
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, b in zip(pairs, bits) if b])


def test_make_graph_examples():
    k2 = make_graph(2, [(0, 1)])
    assert k2.edges() == [(0, 1)]
    c5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5 == cycle_graph(5) and c5.degree_sequence() == (2,) * 5
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.degree_sequence() == (1, 2, 2, 1)
    assert make_graph(3, [(0, 1), (1, 0), (0, 1)]).num_edges() == 1
    for g in (k2, c5, p4):
        check_invariants(g)


@pytest.mark.parametrize("n,edges", [(3, [(0, 3)]), (3, [(-1, 0)]), (3, [(1, 1)]), (0, []), (63, [])])
def test_make_graph_errors(n, edges):
    with pytest.raises(GraphError):
        make_graph(n, edges)


def test_add_remove_examples():
    assert add_edge(make_graph(2, []), 0, 1) == make_graph(2, [(0, 1)])
    assert remove_edge(cycle_graph(5), 0, 1) == make_graph(5, [(1, 2), (2, 3), (3, 4), (4, 0)])
    assert are_isomorphic(remove_edge(cycle_graph(5), 0, 1), path_graph(5))
    assert add_edge(path_graph(4), 0, 3) == cycle_graph(4)
    # idempotent
    assert add_edge(cycle_graph(4), 0, 1) == cycle_graph(4)
    assert remove_edge(path_graph(4), 0, 2) == path_graph(4)


def test_mutation_returns_new_value():
    g = path_graph(4)
    h = add_edge(g, 0, 3)
    assert g == path_graph(4) and h is not g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12), st.data())
def test_add_then_remove_restores(g, data):
    if not g.non_edges():
        return
    u, v = data.draw(st.sampled_from(g.non_edges()))
    h = add_edge(g, u, v)
    check_invariants(h)
    assert h.has_edge(u, v)
    assert remove_edge(h, u, v) == g


def test_connectivity():
    assert is_connected(cycle_graph(5))
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))
    assert not is_connected(build_G(6, 3))
    assert is_connected(make_graph(1, []))


def test_cutvertex():
    assert is_cutvertex(path_graph(3), 1)
    assert not any(is_cutvertex(cycle_graph(5), v) for v in range(5))
    f62 = build_F(6, 2)
    assert f62.hub == 0 and is_cutvertex(f62, 0)
    with pytest.raises(GraphError):
        is_cutvertex(empty_graph(3), 0)


def test_graph6_examples():
    assert encode_graph6(make_graph(2, [(0, 1)])) == "A_"
    assert encode_graph6(make_graph(1, [])) == "@"
    assert decode_graph6("A_") == make_graph(2, [(0, 1)])
    c5 = cycle_graph(5)
    assert decode_graph6(encode_graph6(c5)) == c5


def test_graph6_bit_layout_by_hand():
    # P4 0-1-2-3: bits x01 x02 x12 x03 x13 x23 = 1 0 1 0 0 1 -> 41 + 63 = 104 'h'
    assert encode_graph6(path_graph(4)) == "Ch"


@pytest.mark.parametrize("bad", ["", "A", "A__", "A\x7f", "B ", "~??", "A`"])
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_graph6_roundtrip(g):
    s = encode_graph6(g)
    assert all(63 <= ord(c) <= 126 for c in s)
    assert decode_graph6(s) == g
