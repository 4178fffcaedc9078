import itertools
import random

import pytest

from maxindep.constructions import build_F, build_G, enumerate_family
from maxindep.counting import independence_number
from maxindep.graph import add_edge, cycle_graph, make_graph, path_graph, star_graph
from maxindep.iso import (
    CanonicalForm,
    FamilyDescriptor,
    Kind,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    classify_extremal,
)
from maxindep.verify import generate_graphs

from oracles import brute_isomorphic, labeled_classes, labeled_graph, random_graph


def test_c5_permutation_invariance():
    c5 = cycle_graph(5)
    form = canonical_form(c5)
    for perm in itertools.permutations(range(5)):
        assert canonical_form(c5.relabel(perm)) == form


def test_p4_vs_star():
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(4))


def test_connected_order_four_classes():
    reps = [labeled_graph(4, code) for code, conn in labeled_classes(4) if conn]
    assert len(reps) == 6
    assert len({canonical_form(g) for g in reps}) == 6


def test_canonical_form_separates_exactly_on_all_labeled_5_vertex_graphs():
    classes = labeled_classes(5)
    forms = {}
    for code in range(1 << 10):
        forms.setdefault(canonical_form(labeled_graph(5, code)), []).append(code)
    assert len(forms) == len(classes) == 34


def test_isomorphism_examples():
    assert are_isomorphic(build_F(4, 2), path_graph(4))
    assert not are_isomorphic(cycle_graph(5), build_F(5, 2))
    g = build_F(9, 3)
    perm = list(range(9))
    random.Random(3).shuffle(perm)
    assert are_isomorphic(g, g.relabel(perm))


def test_isomorphism_matches_brute_force_on_random_pairs():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 6)
        g, h = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        assert are_isomorphic(g, h) == brute_isomorphic(g, h)


def test_isomorphism_is_an_equivalence_relation():
    rng = random.Random(5)
    sample = [random_graph(rng, 5, 0.4) for _ in range(40)]
    for g in sample:
        assert are_isomorphic(g, g)
    for g, h in itertools.product(sample, repeat=2):
        assert are_isomorphic(g, h) == are_isomorphic(h, g)
    for g, h, k in itertools.product(sample[:20], repeat=3):
        if are_isomorphic(g, h) and are_isomorphic(h, k):
            assert are_isomorphic(g, k)


def test_canonical_form_roundtrip():
    for g in generate_graphs(6):
        form = canonical_form(g)
        assert len(form.bits) == 15
        assert canonical_form(form.graph()) == form
        assert CanonicalForm.from_graph6(form.graph6()) == form
        assert canonical_graph(g) == form.graph()


def test_classify_examples():
    assert classify_extremal(cycle_graph(5), 5, 2).kind is Kind.C5_EXCEPTION
    for n in range(3, 9):
        d = classify_extremal(star_graph(n), n, n - 1)
        assert d.kind is Kind.FAMILY_MEMBER and d.special_cutvertices == {0}
    d = classify_extremal(path_graph(4), 4, 2)
    assert d.kind is Kind.F_EXTREMAL
    assert d.special_cutvertices == {1, 2}
    assert classify_extremal(make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 4, 2).kind is Kind.NONE


def test_classify_rejects_wrong_alpha():
    with pytest.raises(ValueError):
        classify_extremal(cycle_graph(5), 5, 3)
    with pytest.raises(ValueError):
        classify_extremal(cycle_graph(5), 6, 2)


def test_descriptor_invariants():
    with pytest.raises(ValueError):
        FamilyDescriptor(6, 2, Kind.C5_EXCEPTION)
    with pytest.raises(ValueError):
        FamilyDescriptor(6, 2, Kind.F_EXTREMAL)


@pytest.mark.parametrize("n", range(2, 13))
def test_G_is_recognised(n):
    for alpha in range(1, n):
        assert classify_extremal(build_G(n, alpha), n, alpha).kind is Kind.G_EXTREMAL


def _arises_from_F_by_hub_edges(g, n, alpha, hub):
    # some relabeling sends hub to F's hub and g's edge set to F's plus hub edges only
    base = build_F(n, alpha)
    extra = g.num_edges() - base.num_edges()
    optional = [v for v in range(1, n) if not base.has_edge(0, v)]
    for chosen in itertools.combinations(optional, extra):
        cand = base
        for v in chosen:
            cand = add_edge(cand, 0, v)
        if are_isomorphic(g, cand):
            rooted_g = g.relabel([0 if v == hub else v + (v < hub) for v in range(n)])
            if canonical_form(add_edge_pendant(rooted_g)) == canonical_form(add_edge_pendant(cand)):
                return True
    return False


def add_edge_pendant(g):
    """Attach a new pendant vertex to vertex 0, pinning it down for isomorphism tests."""
    return make_graph(g.n + 1, g.edges() + [(0, g.n)])


@pytest.mark.parametrize("n", range(3, 10))
def test_family_members_arise_from_F_by_hub_edges(n):
    for alpha in range(1, n):
        if n >= 2 * alpha:
            continue
        for g in enumerate_family(n, alpha):
            d = classify_extremal(g, n, alpha)
            assert d.kind is Kind.FAMILY_MEMBER
            assert all(_arises_from_F_by_hub_edges(g, n, alpha, hub) for hub in d.special_cutvertices)


@pytest.mark.parametrize("n", range(3, 9))
def test_every_classified_member_is_in_enumerated_family(n):
    for g in generate_graphs(n, connected_only=True):
        alpha = independence_number(g)
        if alpha >= n or n >= 2 * alpha:
            continue
        d = classify_extremal(g, n, alpha)
        family = {canonical_form(h) for h in enumerate_family(n, alpha)}
        assert (d.kind is Kind.FAMILY_MEMBER) == (canonical_form(g) in family)
