from __future__ import annotations

from math import comb

import pytest

from srgraph import families as fam
from srgraph.errors import InvalidParameter, MalformedInput, OrderTooLarge
from srgraph.graph import complement, is_two_antipodal
from srgraph.iso import are_isomorphic, canonical_form
from srgraph.srg import srg


def test_make_dispatch():
    assert fam.make(fam.Path(4)) == fam.path(4)
    assert fam.make(fam.CompleteBipartite(2, 3)).edge_count == 6
    assert fam.make(fam.CompleteMultipartite((1, 2, 2))).edge_count == 8
    assert fam.make(fam.Star(4)).degrees()[0] == 4
    assert fam.make(fam.Hamming(2, 3)).n == 9
    assert fam.make(fam.Petersen()).edge_count == 15
    J = fam.make(fam.JoinK1(fam.path(4)))
    assert J.label(0) == "apex" and J.degree(0) == 4


@pytest.mark.parametrize(
    "spec",
    [fam.FamilyF(1), fam.FamilyFP(4), fam.CycleStar(6), fam.CycleStar(3), fam.Cycle(2), fam.Path(0)],
)
def test_parameter_bounds(spec):
    with pytest.raises(InvalidParameter):
        fam.make(spec)


def test_family_f_figure4():
    G = fam.make(fam.FamilyF(4))
    assert G.n == 16 == 3 * (4 + 1) + 1
    assert G.vertex_labels()[:5] == ("a0", "a1", "a2", "a3", "a4")


@pytest.mark.parametrize("r", [2, 3, 4])
def test_family_f_strong_resolving_graph(r):
    G = fam.family_f(r)
    R = srg(G)
    lab = {R.label(v): v for v in range(R.n)}
    nbrs = {x: {R.label(u) for u in R.neighbors(v)} for x, v in lab.items()}
    assert nbrs["x"] == {f"b{i}" for i in range(1, r + 1)}
    for i in range(1, r + 1):
        assert nbrs[f"b{i}"] == {"x"}
        assert nbrs[f"a{i}"] == {f"c{j}" for j in range(1, r + 1) if j != i}


@pytest.mark.parametrize("n", range(5, 11))
def test_family_fp_realizes_paths(n):
    G = fam.family_fp(n)
    assert G.n == (n - 1) + (n - 2)
    assert are_isomorphic(srg(G), fam.path(n))


def test_family_fp_labels():
    G = fam.family_fp(10)
    assert G.vertex_labels()[:9] == tuple(f"v{i}" for i in range(1, 10))
    assert set(G.vertex_labels()[9:]) == {f"a{i}" for i in range(1, 5)} | {f"b{i}" for i in range(1, 5)}
    assert fam.figure("fig9a") == fam.family_fp(9)


def test_join_of_p4_realizes_p4():
    assert are_isomorphic(srg(fam.make(fam.JoinK1(fam.path(4)))), fam.path(4))


@pytest.mark.parametrize("n", range(5, 10))
def test_complement_of_cycle_realizes_cycle(n):
    assert are_isomorphic(srg(complement(fam.cycle(n))), fam.cycle(n))


def test_hypercube_and_cycle_star():
    Q3 = fam.make(fam.Hypercube(3))
    assert (Q3.n, Q3.edge_count) == (8, 12) and is_two_antipodal(Q3)
    S = fam.make(fam.CycleStar(5))
    # v0 v2 v4 v1 v3 v0
    assert set(S.edges()) == {tuple(sorted(e)) for e in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]}


def test_pruefer_trees():
    T = fam.tree_from_pruefer((3, 3, 3, 4))
    assert T.n == 6 and T.edge_count == 5 and T.is_connected()
    assert T.degree(3) == 4
    with pytest.raises(InvalidParameter):
        fam.tree_from_pruefer((7,))


@pytest.mark.parametrize(
    "text, n, m",
    [
        ("P5", 5, 4),
        ("C5", 5, 5),
        ("K4", 4, 6),
        ("N3", 3, 0),
        ("S3", 4, 3),
        ("K2,3", 5, 6),
        ("K2,2,3", 7, 16),
        ("Q3", 8, 12),
        ("petersen", 10, 15),
        ("Ham(2,3)", 9, 18),
        ("F(2)", 10, 14),
        ("FP(9)", 15, 21),
        ("Cstar(5)", 5, 5),
        ("pruefer(0,1,1)", 5, 4),
        ("join(P4)", 5, 7),
        ("join(K1,union(K1,K2))", 4, 4),
        ("union(K2, K2)", 4, 2),
        ("compl(C7)", 7, 14),
        ("K(2,3)", 5, 6),
        ("fig:fig5", 8, 8),
        ("g6:Dhc", 5, 5),
    ],
)
def test_parse_spec(text, n, m):
    G = fam.parse_spec(text)
    assert (G.n, G.edge_count) == (n, m)


@pytest.mark.parametrize("text", ["", "X5", "P", "C5)", "join()", "compl(C4,C5)", "Ham(2)", "fig:nope", "g6:~"])
def test_parse_spec_errors(text):
    with pytest.raises((MalformedInput, InvalidParameter)):
        fam.parse_spec(text)


def test_figures_build():
    for name in fam.FIGURES:
        G = fam.figure(name)
        assert G.n > 0
    assert fam.figure("fig13").n == 4
    assert fam.figure("fig11").n == 12
    assert fam.figure("fig7").n == 9


def test_enumeration_examples():
    assert len(list(fam.enumerate_graphs(3, connected_only=True))) == 4
    assert len(list(fam.enumerate_graphs(4, connected_only=True, dedup=True))) == 6
    only = list(fam.enumerate_graphs(1))
    assert len(only) == 1 and only[0].n == 1
    with pytest.raises(OrderTooLarge):
        list(fam.enumerate_graphs(8))


def _connected_labeled_counts(limit: int) -> list[int]:
    # c_n = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c_k 2^C(n-k,2)
    c = [0, 1]
    for n in range(2, limit + 1):
        total = 2 ** comb(n, 2)
        total -= sum(comb(n - 1, k - 1) * c[k] * 2 ** comb(n - k, 2) for k in range(1, n))
        c.append(total)
    return c


def test_connected_counts_match_recurrence():
    expected = _connected_labeled_counts(5)
    for n in range(1, 6):
        assert sum(1 for _ in fam.enumerate_graphs(n, connected_only=True)) == expected[n]


def test_dedup_matches_brute_pairwise_isomorphism():
    reps: list = []
    for G in fam.enumerate_graphs(4, connected_only=True):
        if not any(are_isomorphic(G, R) for R in reps):
            reps.append(G)
    assert len(reps) == 6


def test_enumeration_ranges_partition_the_stream():
    whole = [G.adj for G in fam.enumerate_graphs(5)]
    parts = []
    for s in range(0, 1024, 300):
        parts += [G.adj for G in fam.enumerate_graphs(5, start=s, stop=s + 300)]
    assert parts == whole


def test_graph_classes():
    assert [len(fam.graph_classes(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert [len(fam.graph_classes(n, connected=False)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    codes = {canonical_form(G).code for G in fam.graph_classes(6)}
    assert len(codes) == 112
    with pytest.raises(OrderTooLarge):
        fam.graph_classes(9)
