"""True-twin rewiring (Moon-Moser operation), its saturation run and edge reduction."""

from __future__ import annotations

from dataclasses import dataclass

from maxindep.counting import count_mis, independence_number
from maxindep.graph import Graph, GraphError, _bits, is_connected, is_cutvertex, remove_edge


class TransformError(GraphError):
    pass


@dataclass(frozen=True)
class TwinStep:
    before: Graph
    after: Graph
    x: int
    y: int
    N: frozenset[int]


def best_anchor(g: Graph) -> int:
    """Vertex in the most maximum independent sets (lowest index on ties)."""
    if not is_connected(g):
        raise TransformError("best_anchor needs a connected graph")
    per = count_mis(g, per_vertex=True).per_vertex
    top = max(per)
    return per.index(top)


def make_true_twin(g: Graph, x: int, y: int) -> Graph:
    """Rewire ``y`` so that its closed neighbourhood equals that of ``x``.

    Returns ``g`` itself when ``y`` already is a true twin of ``x``.
    """
    closed = g.closed_mask(x)
    if not closed >> y & 1:
        raise TransformError(f"vertex {y} is not in the closed neighbourhood of {x}")
    if g.closed_mask(y) == closed:
        return g
    if is_cutvertex(g, y):
        raise TransformError(f"vertex {y} is a cutvertex")
    bit = 1 << y
    masks = [m & ~bit for m in g.masks]
    masks[y] = closed & ~bit
    for v in _bits(closed & ~bit):
        masks[v] |= bit
    return Graph(g.n, tuple(masks))


def _next_candidate(g: Graph, closed: int) -> int | None:
    for y in _bits(closed):
        if g.closed_mask(y) != closed and not is_cutvertex(g, y):
            return y
    return None


def moon_moser_saturate(g: Graph, x: int | None = None) -> list[TwinStep]:
    """Turn non-cutvertex members of N[x] into true twins of x until none is left."""
    if not is_connected(g):
        raise TransformError("saturation needs a connected graph")
    if x is None:
        x = best_anchor(g)
    closed = g.closed_mask(x)
    nset = frozenset(_bits(closed))
    steps = []
    cur = g
    while (y := _next_candidate(cur, closed)) is not None:
        nxt = make_true_twin(cur, x, y)
        steps.append(TwinStep(cur, nxt, x, y, nset))
        cur = nxt
    return steps


def saturate(g: Graph, x: int | None = None) -> Graph:
    steps = moon_moser_saturate(g, x)
    return steps[-1].after if steps else g


def reduce_edges_trace(g: Graph, x: int | None = None) -> tuple[Graph, list[tuple[int, int]]]:
    """Like :func:`reduce_edges` but also returns the removed edges in removal order."""
    if not is_connected(g):
        raise TransformError("edge reduction needs a connected graph")
    if x is None:
        x = best_anchor(g)
    alpha = independence_number(g)
    closed = g.closed_mask(x)
    cur = g
    removed = []
    changed = True
    while changed:
        changed = False
        for u, v in cur.edges():
            if (closed >> u & 1) == (closed >> v & 1):
                continue
            cand = remove_edge(cur, u, v)
            if is_connected(cand) and independence_number(cand) == alpha:
                cur = cand
                removed.append((u, v))
                changed = True
    return cur, removed


def reduce_edges(g: Graph, x: int | None = None) -> Graph:
    """Delete N[x]-to-outside edges while connectivity and alpha survive.

    Edges are tried in lexicographic order, repeating passes until a full pass
    removes nothing.
    """
    return reduce_edges_trace(g, x)[0]
