"""Strong resolving graphs, strong metric dimension and their behaviour under graph products."""

from __future__ import annotations

from .errors import GraphError
from .graph import (
    INF,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_graph,
    classify_vertices,
    complement,
    overlay,
    structure_predicates,
)
from .srg import (
    boundary,
    g_star,
    g_star_minus,
    is_2mmf,
    maximally_distant_from,
    mmd_relation,
    srg,
    srg_plus_i,
    srs,
)
from .strongdim import (
    dims,
    dims_oracle,
    dims_via_srg,
    independence_number,
    is_strong_generator,
    strongly_resolves,
    vertex_cover_number,
)
from .products import ProductKind, direct_is_connected, even_odd_distances, product, product_distance
from .families import enumerate_graphs, make, parse_spec
from .iso import are_isomorphic, canonical_form, is_spanning_subgraph
from .io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6

__version__ = "0.1.0"

__all__ = [
    "INF",
    "DistanceMatrix",
    "Graph",
    "GraphError",
    "ProductKind",
    "all_pairs_distances",
    "are_isomorphic",
    "boundary",
    "build_graph",
    "canonical_form",
    "classify_vertices",
    "complement",
    "dims",
    "dims_oracle",
    "dims_via_srg",
    "direct_is_connected",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_graphs",
    "even_odd_distances",
    "g_star",
    "g_star_minus",
    "independence_number",
    "is_2mmf",
    "is_spanning_subgraph",
    "is_strong_generator",
    "make",
    "maximally_distant_from",
    "mmd_relation",
    "overlay",
    "parse_edge_list",
    "parse_graph6",
    "parse_spec",
    "product",
    "product_distance",
    "srg",
    "srg_plus_i",
    "srs",
    "strongly_resolves",
    "structure_predicates",
    "vertex_cover_number",
]
