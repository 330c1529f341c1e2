from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given

from srgraph import families as fam
from srgraph.errors import IndexOutOfRange, LoopEdge, MissingLabels, NotBipartite, OrderTooLarge
from srgraph.graph import (
    INF,
    Graph,
    all_pairs_distances,
    build_graph,
    classify_vertices,
    complement,
    cut_vertices,
    disjoint_union,
    has_bipartite_perfect_matching,
    has_perfect_matching,
    is_c5_connected,
    is_hamiltonian,
    is_simplicial,
    is_two_antipodal,
    overlay,
    simplicial_vertices,
    structure_predicates,
    true_twin_classes,
    true_twins,
)
from srgraph.iso import are_isomorphic
from srgraph.products import ProductKind, product

from .conftest import connected_graphs, graphs, label_set, to_nx


def test_build_k2_and_p4():
    K2 = build_graph(2, [(0, 1)])
    assert K2.edge_count == 1 and K2.has_edge(1, 0)
    P4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert P4.degrees() == [1, 2, 2, 1]


def test_build_figure5_graph():
    G = fam.figure("fig5")
    assert G.n == 8 and G.edge_count == 8
    assert sorted(G.label(v) for v in G.neighbors(G.index("b"))) == ["a", "c", "d", "e"]


def test_build_deduplicates_edges():
    G = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert G.edges() == [(0, 1), (1, 2)]


def test_build_errors():
    with pytest.raises(IndexOutOfRange):
        build_graph(2, [(0, 2)])
    with pytest.raises(LoopEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        build_graph(2, [(0, 1)], ["x", "x"])


def test_complement_examples():
    assert complement(fam.complete(4)).edge_count == 0
    assert are_isomorphic(complement(fam.cycle(5)), fam.cycle(5))


@given(graphs())
def test_complement_is_involution(G):
    assert complement(complement(G)) == G
    assert G.edge_count + complement(G).edge_count == G.n * (G.n - 1) // 2


@given(graphs(min_n=2))
def test_true_twins_become_false_twins_in_complement(G):
    C = complement(G)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if true_twins(G, u, v):
                assert C.adj[u] == C.adj[v]


def test_overlay_builds_wheel():
    C6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)], [str(i) for i in range(1, 7)])
    S = build_graph(7, [(6, i) for i in range(6)], [str(i) for i in range(1, 8)])
    W = overlay(C6, S)
    assert W.n == 7 and W.edge_count == 12
    assert W.degree(W.index("7")) == 6


def test_overlay_idempotent_and_needs_labels():
    G = fam.cycle(5)
    assert overlay(G, G) == G
    with pytest.raises(MissingLabels):
        overlay(build_graph(2, [(0, 1)]), G)


@pytest.mark.parametrize("a, b", [("P3", "C4"), ("K2", "C3"), ("S3", "P2")])
def test_overlay_of_cartesian_and_direct_is_strong(a, b):
    G, H = fam.parse_spec(a), fam.parse_spec(b)
    O = overlay(product(ProductKind.CARTESIAN, G, H), product(ProductKind.DIRECT, G, H))
    S = product(ProductKind.STRONG, G, H)
    assert O.vertex_labels() == S.vertex_labels()
    assert O == S


def test_distance_examples():
    D = all_pairs_distances(fam.path(4))
    assert D[0, 3] == 3
    F2 = fam.figure("fig2")
    # the figure's edge list gives 5 (a-j-c-i-e-g), see the decisions ledger
    assert F2.distances[F2.index("a"), F2.index("g")] == 5
    two_k2 = disjoint_union(fam.complete(2), fam.complete(2))
    assert all_pairs_distances(two_k2)[0, 2] is INF
    assert math.isinf(all_pairs_distances(two_k2).diameter())


@given(graphs())
def test_distance_matrix_invariants(G):
    D = G.distances
    X = to_nx(G)
    ref = dict(nx.all_pairs_shortest_path_length(X))
    for u in range(G.n):
        assert D[u, u] == 0
        for v in range(G.n):
            assert D[u, v] == D[v, u]
            assert D[u, v] == ref[u].get(v, INF)
            for w in range(G.n):
                if D[u, w] != INF and D[w, v] != INF:
                    assert D[u, v] <= D[u, w] + D[w, v]


def test_classify_figure1():
    G = fam.figure("fig1")
    cls = classify_vertices(G)
    twins = [label_set(G, c) for c in cls.true_twin_classes]
    assert any({"d", "e", "f"} <= c for c in twins)
    b, g = G.index("b"), G.index("g")
    assert true_twins(G, b, g)
    assert b not in cls.simplicial and g not in cls.simplicial


def test_classify_figure2_and_path():
    G = fam.figure("fig2")
    assert label_set(G, classify_vertices(G).simplicial) == {"a", "f", "g", "h"}
    P5 = classify_vertices(fam.path(5))
    assert P5.cut_vertices == {1, 2, 3}
    assert P5.leaves == {0, 4}


@given(connected_graphs())
def test_cut_vertices_match_networkx(G):
    assert set(cut_vertices(G)) == set(nx.articulation_points(to_nx(G)))


@given(graphs())
def test_simplicial_neighbourhoods_are_cliques(G):
    for v in simplicial_vertices(G):
        nb = G.neighbors(v)
        assert all(G.has_edge(a, b) for a in nb for b in nb if a < b)
    for v in range(G.n):
        assert is_simplicial(G, v) == (v in simplicial_vertices(G))


@pytest.mark.parametrize("seq", [(0, 0), (1, 2, 3), (4, 4, 1, 0)])
def test_tree_leaves_are_simplicial(seq):
    T = fam.tree_from_pruefer(seq)
    leaves = {v for v in range(T.n) if T.degree(v) == 1}
    assert leaves <= simplicial_vertices(T)


@given(graphs())
def test_true_twin_classes_partition(G):
    classes = true_twin_classes(G)
    seen = sorted(v for c in classes for v in c)
    assert seen == list(range(G.n))
    for c in classes:
        for u in c:
            for v in c:
                assert G.closed_mask(u) == G.closed_mask(v)


def test_structure_examples():
    assert is_two_antipodal(fam.cycle(6))
    assert is_two_antipodal(fam.parse_spec("Q3"))
    assert not is_two_antipodal(fam.cycle(5))
    assert is_c5_connected(fam.petersen())
    assert not is_c5_connected(fam.figure("fig6g"))
    assert is_c5_connected(fam.figure("fig6h"))
    s = structure_predicates(fam.cycle(6))
    assert s.connected and s.bipartite and s.triangle_free and s.is_2_antipodal
    assert s.has_bipartite_perfect_matching and s.is_hamiltonian
    assert structure_predicates(fam.cycle(5)).has_bipartite_perfect_matching is None


@given(graphs(min_n=2))
def test_two_antipodal_partner_relation_is_perfect_matching(G):
    if not is_two_antipodal(G):
        return
    D = G.distances
    diam = D.diameter()
    partner = [[v for v in range(G.n) if D[u, v] == diam] for u in range(G.n)]
    assert all(len(p) == 1 for p in partner)
    assert all(partner[partner[u][0]][0] == u and partner[u][0] != u for u in range(G.n))


@given(connected_graphs(min_n=3))
def test_c5_connected_implies_diameter_at_most_two(G):
    if is_c5_connected(G):
        assert G.distances.diameter() <= 2


def test_hamiltonian_and_matching():
    assert is_hamiltonian(fam.cycle(7))
    assert not is_hamiltonian(fam.petersen())
    assert not is_hamiltonian(fam.star(3))
    with pytest.raises(OrderTooLarge):
        is_hamiltonian(fam.cycle(13))
    assert has_perfect_matching(fam.petersen())
    assert not has_perfect_matching(fam.star(3))
    with pytest.raises(NotBipartite):
        has_bipartite_perfect_matching(fam.cycle(5))


@given(graphs(min_n=2, max_n=8))
def test_matchings_against_networkx(G):
    X = to_nx(G)
    m = nx.max_weight_matching(X, maxcardinality=True)
    assert has_perfect_matching(G) == (2 * len(m) == G.n)
    if nx.is_bipartite(X):
        assert has_bipartite_perfect_matching(G) == (2 * len(m) == G.n)


def test_graph_equality_is_by_index():
    a = build_graph(3, [(0, 1)])
    b = build_graph(3, [(1, 2)])
    assert a != b and are_isomorphic(a, b)
    assert isinstance(a, Graph)
