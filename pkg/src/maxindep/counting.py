"""Exact independence number and maximum independent set counts."""

from __future__ import annotations

from dataclasses import dataclass

from maxindep import _kernels
from maxindep.graph import Graph, _bits

ENUMERATE_MAX_ORDER = 30


@dataclass(frozen=True)
class CountResult:
    alpha: int
    num_mis: int
    per_vertex: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.num_mis < 1:
            raise ValueError("every non-empty graph has a maximum independent set")
        if self.per_vertex is not None:
            if sum(self.per_vertex) != self.alpha * self.num_mis:
                raise ArithmeticError("per-vertex counts do not sum to alpha * num_mis")
            if max(self.per_vertex) > self.num_mis:
                raise ArithmeticError("per-vertex count exceeds the total")


def independence_number(g: Graph) -> int:
    return _kernels.mis_count(g.masks, g.all_vertices)[0]


def _per_vertex(g: Graph, alpha: int) -> tuple[int, ...]:
    full = g.all_vertices
    out = []
    for u in range(g.n):
        a, c = _kernels.mis_count(g.masks, full & ~g.closed_mask(u), alpha - 1)
        out.append(c if a == alpha - 1 else 0)
    return tuple(out)


def count_mis(g: Graph, per_vertex: bool = False) -> CountResult:
    alpha, num = _kernels.mis_count(g.masks, g.all_vertices)
    return CountResult(alpha, num, _per_vertex(g, alpha) if per_vertex else None)


def vertex_count(g: Graph, u: int, alpha: int | None = None) -> int:
    """Number of maximum independent sets containing ``u``."""
    if alpha is None:
        alpha = independence_number(g)
    a, c = _kernels.mis_count(g.masks, g.all_vertices & ~g.closed_mask(u), alpha - 1)
    return c if a == alpha - 1 else 0


def enumerate_mis(g: Graph) -> list[frozenset[int]]:
    """All maximum independent sets, each once, in lexicographic order.

    Lists maximal independent sets (Bron-Kerbosch on the complement, with
    pivoting) and keeps the largest; deliberately shares nothing with the
    counting branch-and-bound so it can serve as a cross-check.
    """
    if g.n > ENUMERATE_MAX_ORDER:
        raise ValueError(f"enumeration limited to n <= {ENUMERATE_MAX_ORDER}")
    full = g.all_vertices
    non = [full & ~g.closed_mask(v) for v in range(g.n)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (non[u] & p).bit_count())
        for v in list(_bits(p & ~non[pivot])):
            bit = 1 << v
            expand(r | bit, p & non[v], x & non[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    size = max(s.bit_count() for s in found)
    best = sorted(sorted(_bits(s)) for s in found if s.bit_count() == size)
    return [frozenset(s) for s in best]


def vertex_in_no_mis(g: Graph) -> int | None:
    """Lowest vertex lying in no maximum independent set, or None."""
    alpha = independence_number(g)
    full = g.all_vertices
    for u in range(g.n):
        a, _ = _kernels.mis_count(g.masks, full & ~g.closed_mask(u), alpha - 1)
        if a < alpha - 1:
            return u
    return None
