"""Independent brute-force oracles. Nothing here touches the package's kernels."""

from __future__ import annotations

import itertools
import random

from maxindep.graph import Graph, make_graph


def brute_mis(g: Graph) -> tuple[int, int, list[int]]:
    """(alpha, number of maximum independent sets, per-vertex counts) by scanning all 2^n subsets."""
    n = g.n
    best, sets = 0, []
    for s in range(1 << n):
        if any(s >> v & 1 and g.masks[v] & s for v in range(n)):
            continue
        k = bin(s).count("1")
        if k > best:
            best, sets = k, [s]
        elif k == best:
            sets.append(s)
    per = [sum(1 for s in sets if s >> v & 1) for v in range(n)]
    return best, len(sets), per


def brute_mis_sets(g: Graph) -> list[frozenset[int]]:
    n = g.n
    best, sets = 0, []
    for s in range(1 << n):
        if any(s >> v & 1 and g.masks[v] & s for v in range(n)):
            continue
        k = bin(s).count("1")
        if k > best:
            best, sets = k, [s]
        elif k == best:
            sets.append(s)
    return [frozenset(t) for t in sorted(tuple(v for v in range(n) if s >> v & 1) for s in sets)]


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


def labeled_graph(n: int, code: int) -> Graph:
    return make_graph(n, [p for k, p in enumerate(_pairs(n)) if code >> k & 1])


def _edge_code(n: int, edges: set[tuple[int, int]]) -> int:
    return sum(1 << k for k, p in enumerate(_pairs(n)) if p in edges)


def _connected(n: int, edges) -> bool:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def labeled_classes(n: int) -> list[tuple[int, bool]]:
    """One (edge-code, connected) per isomorphism class, via explicit orbits under S_n."""
    pairs = _pairs(n)
    perms = list(itertools.permutations(range(n)))
    seen: set[int] = set()
    classes = []
    for code in range(1 << len(pairs)):
        if code in seen:
            continue
        edges = [p for k, p in enumerate(pairs) if code >> k & 1]
        for perm in perms:
            img = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
            seen.add(_edge_code(n, img))
        classes.append((code, _connected(n, edges)))
    return classes


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    target = set(h.edges())
    for perm in itertools.permutations(range(g.n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()} == target:
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus random extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    p = rng.random() * 0.6
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return make_graph(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)
