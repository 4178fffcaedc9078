"""Immutable simple graphs on vertices ``0..n-1`` backed by adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_ORDER = 62


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``masks[v]`` is the neighbourhood of ``v`` as an integer bitset.  ``hub``
    optionally records a distinguished vertex (the special cutvertex of a
    construction); it does not take part in equality or hashing.
    """

    n: int
    masks: tuple[int, ...]
    hub: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.masks) != self.n:
            raise GraphError("mask count does not match order")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if m & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if m >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(m):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(m)) for m in self.masks)

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.masks[v]))

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.closed_mask(v)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.masks[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.masks[u] >> v & 1]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.masks)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        new = [0] * self.n
        for v, m in enumerate(self.masks):
            nm = 0
            for u in _bits(m):
                nm |= 1 << perm[u]
            new[perm[v]] = nm
        hub = None if self.hub is None else perm[self.hub]
        return Graph(self.n, tuple(new), hub)

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``, renumbered in increasing order."""
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        new = []
        for v in order:
            nm = 0
            for u in _bits(self.masks[v]):
                if u in index:
                    nm |= 1 << index[u]
            new.append(nm)
        return Graph(len(order), tuple(new))

    def delete_vertex(self, v: int) -> Graph:
        return self.induced(u for u in range(self.n) if u != v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def from_masks(masks: Iterable[int]) -> Graph:
    masks = tuple(masks)
    return Graph(len(masks), masks)


def _check_pair(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range")
    if u == v:
        raise GraphError("u and v must differ")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    masks = list(g.masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph(g.n, tuple(masks))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, tuple(masks))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    return make_graph(n, [(0, i) for i in range(1, n)])


def reachable(masks: tuple[int, ...] | list[int], start: int, within: int) -> int:
    """Bitset of vertices of ``within`` reachable from ``start`` inside ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    full = g.all_vertices
    return reachable(g.masks, 0, full) == full


def components(g: Graph) -> list[int]:
    left = g.all_vertices
    comps = []
    while left:
        v = (left & -left).bit_length() - 1
        c = reachable(g.masks, v, left)
        comps.append(c)
        left &= ~c
    return comps


def is_cutvertex(g: Graph, v: int) -> bool:
    if not is_connected(g):
        raise GraphError("is_cutvertex needs a connected graph")
    rest = g.all_vertices & ~(1 << v)
    if not rest:
        return False
    start = (rest & -rest).bit_length() - 1
    return reachable(g.masks, start, rest) != rest


# graph6 ---------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise Graph6Error("graph6 single-byte header supports n <= 62")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("orders above 62 are not supported")
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(s) - 1 != expect:
        raise Graph6Error(f"expected {expect} data bytes for n={n}, got {len(s) - 1}")
    data = [ord(ch) - 63 for ch in s[1:]]
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits")
    return Graph(n, tuple(masks))
