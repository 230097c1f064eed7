"""Executable checks for the pendant-edge monad T and the triangle monad S on
finite simple graphs, their algebras (perfect matchings and partial Steiner
triple systems), and limits in the resulting categories."""

from .category import (
    Check,
    Hom,
    LawReport,
    Monad,
    check_monad_laws,
    compose,
    diagram_commutes,
    enumerate_homs,
    identity,
    is_homomorphism,
    pairing,
    projections,
)
from .errors import *  # noqa: F401,F403
from .graph import EMPTY_GRAPH, Graph, graph_product, induced_subgraph, make_graph
from .io import parse_edge_list, serialize_edge_list, to_dot
from .labels import Atom, PairLabel, SetLabel, Tagged, VertexLabel, parse_label
from .matching import (
    T,
    PerfectMatching,
    TAlgebra,
    T_on_morphisms,
    T_on_objects,
    algebra_to_matching,
    check_monad_laws_T,
    enumerate_matchings,
    enumerate_perf_morphisms,
    enumerate_T_algebras,
    equalizer_perf,
    eta_T,
    is_perf_morphism,
    is_perfect_matching,
    is_T_algebra,
    matching_to_algebra,
    mu_T,
    product_perf,
)
from .steiner import (
    PSTS,
    S,
    SAlgebra,
    S_on_morphisms,
    S_on_objects,
    algebra_to_psts,
    check_monad_laws_S,
    enumerate_psts_morphisms,
    enumerate_psts_on,
    enumerate_S_algebras,
    eta_S,
    is_complete_sts,
    is_psts,
    is_psts_morphism,
    is_S_algebra,
    make_psts,
    mu_S,
    product_psts,
    product_psts_bruteforce,
    psts_to_algebra,
    support_graph,
)

__version__ = "0.1.0"
