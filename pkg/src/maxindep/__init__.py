"""Maximum independent sets in small graphs: exact counts, extremal constructions,
isomorph-free generation and exhaustive verification of the extremal bounds."""

from maxindep._kernels import BACKEND
from maxindep.constructions import (
    CliqueStarProfile,
    build_clique_star,
    build_F,
    build_G,
    clique_star_count_formula,
    enumerate_family,
    f_formula,
    g_formula,
)
from maxindep.counting import CountResult, count_mis, enumerate_mis, independence_number, vertex_in_no_mis
from maxindep.graph import (
    Graph,
    add_edge,
    decode_graph6,
    encode_graph6,
    is_connected,
    is_cutvertex,
    make_graph,
    remove_edge,
)
from maxindep.iso import CanonicalForm, FamilyDescriptor, Kind, are_isomorphic, canonical_form, classify_extremal
from maxindep.transform import TwinStep, best_anchor, make_true_twin, moon_moser_saturate, reduce_edges

__version__ = "0.1.0"
