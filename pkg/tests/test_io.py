from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given

from srgraph import families as fam
from srgraph.errors import LoopEdge, MalformedInput, UnsupportedLongForm
from srgraph.graph import Graph, build_graph
from srgraph.io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6

from .conftest import graphs, to_nx


def _reference_graph6(X: nx.Graph) -> str:
    return nx.to_graph6_bytes(X, header=False).decode().strip()


def test_graph6_examples():
    assert emit_graph6(fam.complete(1)) == "@"
    assert emit_graph6(fam.complete(2)) == "A_"
    assert parse_graph6("@") == Graph(1, [0])
    assert parse_graph6("A_") == build_graph(2, [(0, 1)])
    assert parse_graph6(">>graph6<<A_") == build_graph(2, [(0, 1)])
    assert emit_graph6(fam.complete(1)) == _reference_graph6(nx.complete_graph(1))
    assert emit_graph6(fam.complete(2)) == _reference_graph6(nx.complete_graph(2))


def test_graph6_round_trip_on_reference_corpus():
    rng = random.Random(12345)
    for _ in range(1000):
        n = rng.randint(0, 40)
        X = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(2**32))
        s = _reference_graph6(X)
        G = parse_graph6(s)
        assert G.n == n and G.edge_count == X.number_of_edges()
        assert all(G.has_edge(u, v) for u, v in X.edges())
        assert emit_graph6(G) == s


@given(graphs(min_n=0, max_n=12))
def test_emit_matches_reference_encoder(G):
    assert emit_graph6(G) == _reference_graph6(to_nx(G))


def test_round_trip_on_enumeration_stream():
    for n in range(0, 6):
        for G in fam.enumerate_graphs(n):
            assert parse_graph6(emit_graph6(G)) == G
    for n in (6, 7, 8):
        classes = fam.graph_classes(n, connected=n == 8)
        for G in classes:
            assert parse_graph6(emit_graph6(G)) == Graph(G.n, G.adj)
    assert len(fam.graph_classes(8)) == 11117


@pytest.mark.parametrize("bad", ["", "A", "A__", "B!", "A`", "\x7f"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedInput):
        parse_graph6(bad)


def test_graph6_long_form_rejected():
    with pytest.raises(UnsupportedLongForm):
        parse_graph6("~?@?")
    with pytest.raises(UnsupportedLongForm):
        emit_graph6(Graph(63, [0] * 63))


def test_edge_list_examples():
    assert parse_edge_list("n 2\n0 1") == build_graph(2, [(0, 1)])
    G = parse_edge_list("0 1\n1 0\n0 1\n")
    assert G.edge_count == 1
    with pytest.raises(LoopEdge):
        parse_edge_list("0 0")


def test_edge_list_whitespace_comments_and_isolated_vertices():
    G = parse_edge_list("# a comment\n  n   5 \n\n 0\t1   # trailing\n3 1\n")
    assert G.n == 5 and G.edges() == [(0, 1), (1, 3)]
    assert emit_edge_list(G) == "n 5\n0 1\n1 3\n"


def test_edge_list_with_labels():
    G = parse_edge_list("a b\nb c\nc a\nc d\n")
    assert G.vertex_labels() == ("a", "b", "c", "d")
    text = emit_edge_list(G)
    assert text.startswith("n 4\nlabels a b c d\n")
    assert parse_edge_list(text) == G
    H = parse_edge_list("n 3\nlabels x y z\nz x\n")
    assert H.edges() == [(0, 2)] and H.label(2) == "z"


@pytest.mark.parametrize("bad", ["0 1 2", "n x\n0 1", "n 2\n0 5", "labels a a\na a", "n 2\nlabels a b c", "n 1\na b"])
def test_edge_list_malformed(bad):
    with pytest.raises(MalformedInput):
        parse_edge_list(bad)


@given(graphs(max_n=10))
def test_edge_list_round_trip(G):
    assert parse_edge_list(emit_edge_list(G)) == G
    L = G.with_labels([f"v{i}" for i in range(G.n)])
    back = parse_edge_list(emit_edge_list(L))
    assert back == L and back.vertex_labels() == L.vertex_labels()


def test_emission_is_sorted_and_deterministic():
    G = build_graph(4, [(3, 2), (1, 0), (2, 0)])
    assert emit_edge_list(G) == "n 4\n0 1\n0 2\n2 3\n"
    assert emit_edge_list(G) == emit_edge_list(build_graph(4, [(0, 2), (2, 3), (0, 1)]))
