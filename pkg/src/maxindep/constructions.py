"""The extremal graphs G(n, a), F(n, a), clique stars and their closed-form counts.

Layout convention: cliques are laid out consecutively starting with clique 0,
the hub (special cutvertex) is vertex 0 and the attachment vertex of clique
``i`` is its first vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from maxindep.graph import Graph, add_edge, is_connected


def _check(n: int, alpha: int, strict: bool) -> None:
    if alpha < 1 or alpha > n or (strict and alpha == n):
        rel = "<" if strict else "<="
        raise ValueError(f"need 1 <= alpha {rel} n, got n={n}, alpha={alpha}")


def balanced_sizes(n: int, alpha: int) -> tuple[int, ...]:
    """Clique orders of G(n, alpha), largest first."""
    _check(n, alpha, strict=False)
    q, r = divmod(n, alpha)
    return (q + 1,) * r + (q,) * (alpha - r)


@dataclass(frozen=True)
class CliqueStarProfile:
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ValueError("profile needs at least one clique")
        if any(s < 1 for s in self.sizes):
            raise ValueError("clique orders must be positive")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def alpha(self) -> int:
        return len(self.sizes)

    def offsets(self) -> list[int]:
        out, at = [], 0
        for s in self.sizes:
            out.append(at)
            at += s
        return out


def _disjoint_cliques(sizes: Sequence[int]) -> list[int]:
    masks = []
    at = 0
    for s in sizes:
        block = ((1 << s) - 1) << at
        masks.extend(block & ~(1 << v) for v in range(at, at + s))
        at += s
    return masks


def build_G(n: int, alpha: int) -> Graph:
    """Disjoint balanced cliques: the complement of the Turan graph."""
    return Graph(n, tuple(_disjoint_cliques(balanced_sizes(n, alpha))))


def build_clique_star(profile: CliqueStarProfile | Sequence[int]) -> Graph:
    if not isinstance(profile, CliqueStarProfile):
        profile = CliqueStarProfile(tuple(profile))
    masks = _disjoint_cliques(profile.sizes)
    for off in profile.offsets()[1:]:
        masks[0] |= 1 << off
        masks[off] |= 1
    return Graph(profile.n, tuple(masks), hub=0)


def build_F(n: int, alpha: int) -> Graph:
    _check(n, alpha, strict=True)
    return build_clique_star(CliqueStarProfile(balanced_sizes(n, alpha)))


def g_formula(n: int, alpha: int) -> int:
    _check(n, alpha, strict=False)
    q, r = divmod(n, alpha)
    return q ** (alpha - r) * (q + 1) ** r


def f_formula(n: int, alpha: int) -> int:
    # (|C_i| - 1) over the attached cliques; avoids a negative exponent when alpha | n
    _check(n, alpha, strict=True)
    return g_formula(n - 1, alpha) + prod(s - 1 for s in balanced_sizes(n, alpha)[1:])


def clique_star_count_formula(profile: CliqueStarProfile | Sequence[int]) -> int:
    if not isinstance(profile, CliqueStarProfile):
        profile = CliqueStarProfile(tuple(profile))
    n0, *rest = profile.sizes
    return (n0 - 1) * prod(rest) + prod(s - 1 for s in rest)


def enumerate_family(n: int, alpha: int) -> list[Graph]:
    """Pairwise non-isomorphic members of the extremal connected family, F(n, alpha) first."""
    from maxindep.counting import independence_number
    from maxindep.graph import cycle_graph
    from maxindep.iso import canonical_form, hub_candidates

    _check(n, alpha, strict=True)
    base = build_F(n, alpha)
    if n >= 2 * alpha:
        return [base, cycle_graph(5)] if (n, alpha) == (5, 2) else [base]
    optional = [v for v in range(1, n) if not base.has_edge(0, v)]
    seen = set()
    members = []
    for subset in range(1 << len(optional)):
        g = base
        for i, v in enumerate(optional):
            if subset >> i & 1:
                g = add_edge(g, 0, v)
        form = canonical_form(g)
        if form in seen:
            continue
        if not is_connected(g) or independence_number(g) != alpha or 0 not in hub_candidates(g, alpha):
            continue
        seen.add(form)
        members.append(Graph(g.n, g.masks, hub=0))
    return members
