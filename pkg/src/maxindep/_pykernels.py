"""Pure-Python hot kernels.

Both functions work on adjacency bitmasks (``masks[v]`` is an int bitset) and
mirror the compiled versions in ``_ckernels.pyx`` exactly, including branching
order and tie-breaking, so either backend gives identical results.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def _clique_cover(masks: Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand``."""
    cliques = 0
    rest = cand
    while rest:
        low = rest & -rest
        pool = rest & masks[low.bit_length() - 1]
        rest ^= low
        while pool:
            low = pool & -pool
            rest ^= low
            pool &= masks[low.bit_length() - 1]
        cliques += 1
    return cliques


def _component(masks: Sequence[int], seed: int, within: int) -> int:
    seen = frontier = seed
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def _count(masks: Sequence[int], cand: int, lb: int) -> tuple[int, int]:
    # Exact (alpha, count) for the subgraph on cand whenever alpha >= lb;
    # otherwise some alpha' < lb is returned with count 0.
    if not cand:
        return 0, 1
    best_v = -1
    best_d = -1
    m = cand
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        d = (masks[v] & cand).bit_count()
        if d > best_d:
            best_d = d
            best_v = v
    if best_d == 0:
        return cand.bit_count(), 1
    comp = _component(masks, cand & -cand, cand)
    if comp != cand:
        # disconnected: alphas add, counts multiply
        alpha, count = 0, 1
        rest = cand
        while rest:
            comp = _component(masks, rest & -rest, rest)
            a, c = _count(masks, comp, 0)
            alpha += a
            count *= c
            rest &= ~comp
        return alpha, count
    ub = _clique_cover(masks, cand)
    if ub < lb:
        return ub, 0
    if ub == 1:
        return 1, cand.bit_count()
    bit = 1 << best_v
    a_in, c_in = _count(masks, cand & ~masks[best_v] & ~bit, lb - 1 if lb > 0 else 0)
    a_in += 1
    if a_in >= lb:
        a_out, c_out = _count(masks, cand & ~bit, a_in)
        if a_out > a_in:
            return a_out, c_out
        if a_out == a_in:
            return a_in, c_in + c_out
        return a_in, c_in
    a_out, c_out = _count(masks, cand & ~bit, lb)
    if a_out >= lb:
        return a_out, c_out
    return max(a_in, a_out), 0


def mis_count(masks: Sequence[int], cand: int, lb: int = 0) -> tuple[int, int]:
    """Independence number and number of maximum independent sets of ``cand``.

    With ``lb > 0`` the search may stop early; the returned pair is exact only
    when its first entry is at least ``lb``.
    """
    return _count(masks, cand, lb)


# canonical labeling -----------------------------------------------------------


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cms = []
        for cell in cells:
            cm = 0
            for v in cell:
                cm |= 1 << v
            cms.append(cm)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                m = masks[v]
                groups.setdefault(tuple([(m & cm).bit_count() for cm in cms]), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _leaf_code(masks: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | (mj >> order[i] & 1)
    return code


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _prunable(v: int, done: list[int], autos: list[list[int]], path: list[int], n: int) -> bool:
    parent = list(range(n))
    for gamma in autos:
        if any(gamma[p] != p for p in path):
            continue
        for a in range(n):
            ra, rb = _find(parent, a), _find(parent, gamma[a])
            if ra != rb:
                parent[ra] = rb
    rv = _find(parent, v)
    return any(_find(parent, u) == rv for u in done)


def canonical_labeling(n: int, masks: Sequence[int]) -> tuple[list[int], int]:
    """Return ``(order, code)``.

    ``order[i]`` is the vertex placed at canonical position ``i``; ``code`` is
    the upper-triangle adjacency bit-string of the relabeled graph (pair
    ``(0, 1)`` most significant, graph6 column order), minimised over the
    leaves of an individualisation/refinement search tree.
    """
    masks = list(masks)
    first: list = []
    best: list = []
    autos: list[list[int]] = []

    def search(cells: list[list[int]], path: list[int]) -> int | None:
        tidx = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                tidx = i
                break
        if tidx < 0:
            order = [c[0] for c in cells]
            code = _leaf_code(masks, order)
            if not first:
                first.extend((order, code, path))
                best.extend((order, code))
                return None
            if code == first[1]:
                gamma = [0] * n
                for p, q in zip(first[0], order):
                    gamma[p] = q
                autos.append(gamma)
                k = 0
                while path[k] == first[2][k]:
                    k += 1
                return k
            if code == best[1]:
                gamma = [0] * n
                for p, q in zip(best[0], order):
                    gamma[p] = q
                autos.append(gamma)
            elif code < best[1]:
                best[0] = order
                best[1] = code
            return None
        depth = len(path)
        target = cells[tidx]
        done: list[int] = []
        for v in target:
            if done and _prunable(v, done, autos, path, n):
                continue
            child = cells[:tidx] + [[v], [u for u in target if u != v]] + cells[tidx + 1:]
            r = search(_refine(masks, child), path + [v])
            done.append(v)
            if r is not None and r < depth:
                return r
        return None

    search(_refine(masks, [list(range(n))]), [])
    return best[0], best[1]
