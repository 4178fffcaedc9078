"""Canonical forms, isomorphism testing and recognition of the extremal graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from maxindep import _kernels
from maxindep.graph import Graph, decode_graph6, encode_graph6, is_connected


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: order plus the canonical upper-triangle bit-string.

    ``code`` holds the bits as an integer whose most significant bit is pair
    ``(0, 1)``; ``bits`` renders it as a fixed-width 0/1 string.
    """

    n: int
    code: int

    @property
    def bits(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.code, f"0{width}b") if width else ""

    def graph(self) -> Graph:
        masks = [0] * self.n
        k = self.n * (self.n - 1) // 2
        for j in range(1, self.n):
            for i in range(j):
                k -= 1
                if self.code >> k & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        return Graph(self.n, tuple(masks))

    def graph6(self) -> str:
        return encode_graph6(self.graph())

    @classmethod
    def from_graph6(cls, text: str) -> CanonicalForm:
        return canonical_form(decode_graph6(text))


def canonical_labeling(g: Graph) -> tuple[list[int], CanonicalForm]:
    """``order[i]`` is the vertex of ``g`` sitting at canonical position ``i``."""
    order, code = _kernels.canonical_labeling(g.n, g.masks)
    return order, CanonicalForm(g.n, code)


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, _kernels.canonical_labeling(g.n, g.masks)[1])


def canonical_graph(g: Graph) -> Graph:
    order, _ = _kernels.canonical_labeling(g.n, g.masks)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    return canonical_form(g) == canonical_form(h)


class Kind(str, Enum):
    G_EXTREMAL = "G-extremal"
    F_EXTREMAL = "F-extremal"
    FAMILY_MEMBER = "Family-member"
    C5_EXCEPTION = "C5-exception"
    NONE = "none"


FAMILY_KINDS = frozenset({Kind.F_EXTREMAL, Kind.FAMILY_MEMBER, Kind.C5_EXCEPTION})


@dataclass(frozen=True)
class FamilyDescriptor:
    n: int
    alpha: int
    kind: Kind
    special_cutvertices: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.kind is Kind.C5_EXCEPTION and (self.n, self.alpha) != (5, 2):
            raise ValueError("C5-exception only exists for (n, alpha) = (5, 2)")
        if self.kind in (Kind.F_EXTREMAL, Kind.FAMILY_MEMBER) and not self.special_cutvertices:
            raise ValueError(f"{self.kind.value} needs at least one special cutvertex")

    @property
    def in_family(self) -> bool:
        return self.kind in FAMILY_KINDS

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "kind": self.kind.value,
            "special_cutvertices": sorted(self.special_cutvertices),
        }


def hub_candidates(g: Graph, alpha: int) -> frozenset[int]:
    """Vertices ``x`` with ``g - x`` isomorphic to ``G(n-1, alpha)``."""
    from maxindep.constructions import build_G

    if g.n - 1 < alpha:
        return frozenset()
    target = canonical_form(build_G(g.n - 1, alpha))
    return frozenset(x for x in range(g.n) if canonical_form(g.delete_vertex(x)) == target)


def classify_extremal(g: Graph, n: int, alpha: int) -> FamilyDescriptor:
    """Decide which extremal construction (if any) ``g`` is isomorphic to."""
    from maxindep.constructions import build_F, build_G
    from maxindep.counting import independence_number
    from maxindep.graph import cycle_graph

    if g.n != n:
        raise ValueError(f"graph has order {g.n}, not {n}")
    actual = independence_number(g)
    if actual != alpha:
        raise ValueError(f"supplied alpha={alpha} but the graph has independence number {actual}")
    form = canonical_form(g)
    if form == canonical_form(build_G(n, alpha)):
        return FamilyDescriptor(n, alpha, Kind.G_EXTREMAL)
    if alpha >= n or not is_connected(g):
        return FamilyDescriptor(n, alpha, Kind.NONE)
    if n >= 2 * alpha:
        if form == canonical_form(build_F(n, alpha)):
            return FamilyDescriptor(n, alpha, Kind.F_EXTREMAL, hub_candidates(g, alpha))
        if (n, alpha) == (5, 2) and form == canonical_form(cycle_graph(5)):
            return FamilyDescriptor(n, alpha, Kind.C5_EXCEPTION)
        return FamilyDescriptor(n, alpha, Kind.NONE)
    hubs = hub_candidates(g, alpha)
    if hubs:
        return FamilyDescriptor(n, alpha, Kind.FAMILY_MEMBER, hubs)
    return FamilyDescriptor(n, alpha, Kind.NONE)
