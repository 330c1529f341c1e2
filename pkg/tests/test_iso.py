from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from srgraph import families as fam
from srgraph.errors import LabelMismatch, OrderTooLarge
from srgraph.graph import Graph, build_graph, complement
from srgraph.iso import are_isomorphic, canonical_form, is_spanning_subgraph, isomorphism
from srgraph.products import ProductKind, product

from .conftest import graphs, to_nx


def test_canonical_form_examples():
    assert canonical_form(fam.cycle(5)) == canonical_form(complement(fam.cycle(5)))
    assert canonical_form(fam.star(3)) != canonical_form(fam.path(4))
    cf = canonical_form(fam.star(3))
    assert cf.degrees == (1, 1, 1, 3) and cf.triangles == 0


def test_canonical_form_is_stable_under_relabeling():
    rng = random.Random(7)
    for n in range(1, 7):
        for G in fam.graph_classes(n, connected=False):
            code = canonical_form(G).code
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(G.permuted(perm)).code == code


def test_non_isomorphic_classes_have_distinct_forms():
    for n in range(1, 6):
        classes = list(fam.enumerate_graphs(n, dedup=True))
        codes = {canonical_form(G).code for G in classes}
        assert len(codes) == len(classes)
        for i, G in enumerate(classes):
            for H in classes[i + 1 :]:
                assert not nx.is_isomorphic(to_nx(G), to_nx(H))


@given(graphs(max_n=8), graphs(max_n=8))
def test_agrees_with_networkx(G, H):
    assert are_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_witness_mapping_is_an_isomorphism(G, rng):
    perm = list(range(G.n))
    rng.shuffle(perm)
    H = G.permuted(perm)
    m = isomorphism(G, H)
    assert m is not None and sorted(m.values()) == list(range(G.n))
    for u in range(G.n):
        for v in range(G.n):
            assert G.has_edge(u, v) == H.has_edge(m[u], m[v])


def test_examples_from_products():
    C3 = fam.cycle(3)
    assert are_isomorphic(product(ProductKind.CARTESIAN, C3, C3), product(ProductKind.DIRECT, C3, C3))
    assert not are_isomorphic(fam.cycle(6), fam.parse_spec("union(K3,K3)"))


def test_equivalence_relation_spot_suite():
    pool = [fam.parse_spec(s) for s in ["C6", "union(K3,K3)", "K3,3", "compl(K3,3)", "Ham(1,6)", "P6", "compl(C6)"]]
    rel = [[are_isomorphic(a, b) for b in pool] for a in pool]
    k = len(pool)
    for i in range(k):
        assert rel[i][i]
        for j in range(k):
            assert rel[i][j] == rel[j][i]
            for t in range(k):
                if rel[i][j] and rel[j][t]:
                    assert rel[i][t]


@pytest.mark.parametrize(
    "a, b",
    [("C5;petersen", ProductKind.DIRECT), ("petersen;K2,3", ProductKind.DIRECT), ("C5;C5", ProductKind.CARTESIAN)],
)
def test_large_vertex_transitive_products(a, b):
    G, H = (fam.parse_spec(x) for x in a.split(";"))
    P = product(b, G, H)
    rng = random.Random(3)
    perm = list(range(P.n))
    rng.shuffle(perm)
    Q = P.permuted(perm)
    assert are_isomorphic(P, Q)
    assert nx.is_isomorphic(to_nx(P), to_nx(Q))


def test_large_non_isomorphic_pair():
    A = product(ProductKind.CARTESIAN, fam.cycle(5), fam.cycle(5))
    B = product(ProductKind.DIRECT, fam.cycle(5), fam.cycle(5))
    assert A.edge_count == 50 and B.edge_count == 50
    assert are_isomorphic(A, B) == nx.is_isomorphic(to_nx(A), to_nx(B))


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        canonical_form(Graph(65, [0] * 65))


def test_spanning_subgraph():
    G, H = fam.path(3), fam.path(4)
    assert is_spanning_subgraph(fam.cycle(4), fam.cycle(4))
    P = product(ProductKind.CARTESIAN, G, H)
    assert is_spanning_subgraph(P, product(ProductKind.STRONG, G, H))
    assert not is_spanning_subgraph(product(ProductKind.STRONG, G, H), P)
    with pytest.raises(LabelMismatch):
        is_spanning_subgraph(fam.path(3), fam.path(4))
    with pytest.raises(LabelMismatch):
        is_spanning_subgraph(build_graph(2, [(0, 1)], ["x", "y"]), fam.path(2))


def test_spanning_subgraph_matches_by_label_not_index():
    A = build_graph(3, [(0, 1)], ["a", "b", "c"])
    B = build_graph(3, [(1, 2)], ["c", "a", "b"])
    assert is_spanning_subgraph(A, B)
