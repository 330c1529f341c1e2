"""Machine verification of the strong-resolving-graph statements on finite instances.

Every statement has an identifier (``T20``, ``P42``, ...), a short anchor
formula and a check.  A check receives one instance, a list of graphs, and
returns an :class:`Outcome`: the claimed relation holds, fails (with the
graphs needed to reproduce the failure), or the instance does not meet the
statement's hypotheses.  Instances come either from the fixed grids in
``data/grids.toml`` or from exhaustive enumeration of small labeled graphs.
"""

from __future__ import annotations

import math
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import product as all_combinations
from typing import Callable

import numpy as np

from . import families as fam
from .errors import GridTooLarge, InvalidParameter
from .graph import (
    INF,
    Graph,
    build_graph,
    complement,
    cut_vertices,
    is_bipartite,
    is_c5_connected,
    is_complete,
    is_hamiltonian,
    has_perfect_matching,
    has_bipartite_perfect_matching,
    is_path_graph,
    is_triangle_free,
    is_true_twin_free,
    is_false_twin_free,
    is_two_antipodal,
    iter_bits,
    overlay,
    simplicial_vertices,
    true_twins,
    vertices_in_triangles,
    bipartition,
    complete_bipartite_parts,
)
from .io import emit_graph6
from .iso import are_isomorphic
from .products import ProductKind, corona_index, product, product_distance
from .srg import (
    boundary,
    boundary_from_maximal_distance,
    g_star,
    g_star_minus,
    is_2mmf,
    mmd_relation,
    srg,
    srg_plus_i,
    srs,
)
from .strongdim import (
    dims_oracle,
    dims_via_srg,
    independence_number,
    strong_bases,
    vertex_cover_number,
)

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - exercised on 3.10 only
    import tomli as tomllib

PRODUCT_MAX_ORDER = 60
EXHAUSTIVE_MAX_ORDER = 6


# ---------------------------------------------------------------------------
# Outcomes and reports
# ---------------------------------------------------------------------------


@dataclass
class Outcome:
    status: str  # "pass" | "fail" | "n/a"
    detail: str = ""
    graphs: dict[str, Graph] = field(default_factory=dict)


def ok() -> Outcome:
    return Outcome("pass")


def na(reason: str) -> Outcome:
    return Outcome("n/a", reason)


def fail(detail: str, **graphs: Graph) -> Outcome:
    return Outcome("fail", detail, graphs)


@dataclass
class TheoremReport:
    theorem: str
    anchor_quote: str
    instances: list[dict]
    verdict: str  # PASS | FAIL | SKIPPED
    elapsed_ms: float
    reason: str = ""
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "anchor_quote": self.anchor_quote,
            "instances": self.instances,
            "verdict": self.verdict,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.reason:
            out["reason"] = self.reason
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def summary(self) -> str:
        checked = sum(i.get("checked", 1) for i in self.instances if i.get("status") == "pass")
        line = f"{self.theorem}: {self.verdict} ({checked} checked, {self.elapsed_ms / 1000:.2f} s)"
        if self.reason:
            line += f" - {self.reason}"
        if self.counterexample:
            line += f"\n  counterexample: {self.counterexample['detail']}"
            line += f"\n  replay: {self.counterexample['replay']}"
        return line


# ---------------------------------------------------------------------------
# Small helpers shared by the checks
# ---------------------------------------------------------------------------


def _iso(A: Graph, B: Graph) -> bool:
    return are_isomorphic(A, B)


def _copies(G: Graph, k: int) -> Graph:
    return fam.union(*([G] * k)) if k > 0 else Graph(0, [])


def _union(*graphs: Graph) -> Graph:
    parts = [g for g in graphs if g.n > 0]
    return fam.union(*parts) if parts else Graph(0, [])


def _relabel(G: Graph, names: list[str]) -> Graph:
    return G.with_labels(names)


def _empty_on(labels: list[str]) -> Graph:
    return build_graph(len(labels), [], labels)


def _complete_on(labels: list[str]) -> Graph:
    n = len(labels)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], labels)


def _indexed(G: Graph) -> Graph:
    return G.with_labels([str(i) for i in range(G.n)])


def _diam(G: Graph):
    return G.distances.diameter()


def _max_degree(G: Graph) -> int:
    return max(G.degrees(), default=0)


def _has_isolated(G: Graph) -> bool:
    return any(d == 0 for d in G.degrees())


def _is_edgeless(G: Graph) -> bool:
    return G.edge_count == 0


def _component_graphs(G: Graph) -> list[Graph]:
    return [G.induced(iter_bits(c)) for c in G.component_masks()]


def _cycle_order(G: Graph) -> list[int] | None:
    """Vertices of a cycle graph in cyclic order starting at 0, else ``None``."""
    if G.n < 3 or not G.is_connected() or any(d != 2 for d in G.degrees()):
        return None
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = [u for u in G.neighbors(cur) if u != prev][0]
        if nxt == 0:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _path_order(G: Graph) -> list[int] | None:
    if not is_path_graph(G):
        return None
    if G.n == 1:
        return [0]
    start = min(v for v in range(G.n) if G.degree(v) == 1)
    order = [start]
    prev = -1
    while len(order) < G.n:
        cur = order[-1]
        nxt = [u for u in G.neighbors(cur) if u != prev][0]
        prev = cur
        order.append(nxt)
    return order


def _need_orders(graphs: list[Graph], k: int) -> None:
    if len(graphs) != k:
        raise InvalidParameter(f"instance needs {k} graph(s), got {len(graphs)}")


# ---------------------------------------------------------------------------
# Per-graph checks (used by the exhaustive pass and by explicit instances)
# ---------------------------------------------------------------------------


def _dims(G: Graph):
    d = G._cache.get("dims_oracle")
    if d is None:
        d = dims_oracle(G)
        G._cache["dims_oracle"] = d
    return d


def check_reduction(gs: list[Graph]) -> Outcome:
    (G,) = gs
    if not G.is_connected():
        return na("disconnected")
    oracle = _dims(G).dimension
    beta = vertex_cover_number(srg(G)).size
    beta_i = vertex_cover_number(srg_plus_i(G)).size
    if not oracle == beta == beta_i:
        return fail(f"dims oracle {oracle}, beta(G_SR) {beta}, beta(G_SR+I) {beta_i}", G=G)
    via = dims_via_srg(G)
    if via.dimension != oracle:
        return fail(f"reduction route gives {via.dimension}, oracle {oracle}", G=G)
    bd = len(boundary(G).boundary)
    alpha = independence_number(srg(G))
    if oracle != bd - alpha:
        return fail(f"dims {oracle} != |boundary| {bd} - alpha(G_SR) {alpha}", G=G)
    return ok()


def check_gallai(gs: list[Graph]) -> Outcome:
    (G,) = gs
    a = independence_number(G)
    b = vertex_cover_number(G).size
    if a + b != G.n:
        return fail(f"alpha {a} + beta {b} != n {G.n}", G=G)
    return ok()


def check_obs1(gs: list[Graph]) -> Outcome:
    (G,) = gs
    if not G.is_connected() or G.n < 2:
        return na("needs a connected graph of order >= 2")
    d = _dims(G).dimension
    via = dims_via_srg(G).dimension
    if d != via:
        return fail(f"oracle {d} and reduction {via} disagree", G=G)
    n = G.n
    expected: list[tuple[str, int]] = []
    if is_path_graph(G):
        expected.append(("path", 1))
    if is_complete(G):
        expected.append(("complete", n - 1))
    if _cycle_order(G) is not None:
        expected.append(("cycle", math.ceil(n / 2)))
    if G.edge_count == n - 1:
        leaves = sum(1 for v in range(n) if G.degree(v) == 1)
        expected.append(("tree", leaves - 1))
    parts = complete_bipartite_parts(G)
    if parts is not None and sum(parts) >= 3:
        expected.append(("complete bipartite", sum(parts) - 2))
    # the two characterisations: dims = 1 only for paths, dims = n-1 only for K_n
    if (d == 1) != is_path_graph(G):
        return fail(f"dims = {d} but path test says {is_path_graph(G)}", G=G)
    if (d == n - 1) != is_complete(G):
        return fail(f"dims = {d} = n-1 is {d == n - 1}, completeness {is_complete(G)}", G=G)
    for name, value in expected:
        if d != value:
            return fail(f"{name} formula gives {value}, computed {d}", G=G)
    return ok()


def check_obs2(gs: list[Graph]) -> Outcome:
    (G,) = gs
    if not G.is_connected() or G.n < 2:
        return na("needs a connected graph of order >= 2")
    R = srg(G)
    applied = False
    bd = boundary(G).boundary
    if bd == simplicial_vertices(G):
        applied = True
        if not is_complete(R) or R.n != len(bd):
            return fail("boundary equals simplicial set but G_SR is not complete", G=G, G_SR=R)
    if G.edge_count == G.n - 1:
        applied = True
        leaves = sum(1 for v in range(G.n) if G.degree(v) == 1)
        if not _iso(R, fam.complete(leaves)):
            return fail(f"tree SR graph is not K_{leaves}", G=G, G_SR=R)
    if is_two_antipodal(G):
        applied = True
        if G.n % 2 or not _iso(R, _copies(fam.complete(2), G.n // 2)):
            return fail("2-antipodal SR graph is not a perfect matching", G=G, G_SR=R)
    cyc = _cycle_order(G)
    if cyc is not None and G.n % 2 == 1:
        applied = True
        if not _iso(R, G):
            return fail("odd cycle is not its own SR graph", G=G, G_SR=R)
    comps = _component_graphs(complement(G))
    if len(comps) >= 2 and all(is_complete(c) and c.n >= 2 for c in comps):
        applied = True
        expected = _union(*[fam.complete(c.n) for c in comps])
        if not _iso(R, expected):
            return fail("complete multipartite SR graph is not the union of its parts", G=G, G_SR=R)
    return ok() if applied else na("no catalogued shape applies")


def check_remark1(gs: list[Graph]) -> Outcome:
    (G,) = gs
    a = boundary(G).boundary
    b = boundary_from_maximal_distance(G)
    if a != b:
        return fail(f"MMD boundary {sorted(a)} != maximal-distance boundary {sorted(b)}", G=G)
    return ok()


def check_remark2(gs: list[Graph]) -> Outcome:
    (G,) = gs
    pairs = mmd_relation(G).pairs()
    for S in strong_bases(G):
        for x, y in pairs:
            if x not in S and y not in S:
                return fail(f"basis {sorted(S)} misses MMD pair ({x},{y})", G=G)
    return ok()


def check_lemma6(gs: list[Graph]) -> Outcome:
    (G,) = gs
    D = np.array(G.distances.rows, dtype=np.int64)
    B = np.array(sorted(boundary(G).boundary), dtype=np.int64)
    if len(B) == 0:
        return fail("empty boundary", G=G)
    DB = D[B]  # boundary rows
    # total[a, x, y, b] = d(a,x) + d(x,y) + d(y,b) - d(a,b)
    total = (
        DB[:, :, None, None]
        + D[None, :, :, None]
        + DB.T[None, None, :, :]
        - D[np.ix_(B, B)][:, None, None, :]
    )
    extendable = (total == 0).any(axis=(0, 3))
    bad = np.argwhere(~extendable)
    if len(bad):
        x, y = bad[0]
        return fail(f"shortest paths between {x} and {y} do not extend to boundary ends", G=G)
    return ok()


def check_lemma7(gs: list[Graph]) -> Outcome:
    (G,) = gs
    bd = boundary(G).boundary
    rel = mmd_relation(G)
    for v in bd - simplicial_vertices(G):
        non_nbrs = [a for a in bd if a != v and not rel.is_mmd(v, a)]
        if len(non_nbrs) < 2:
            return fail(f"vertex {v} has fewer than two non-MMD boundary vertices", G=G)
    return ok()


def check_theorem8(gs: list[Graph]) -> Outcome:
    (G,) = gs
    bd = boundary(G).boundary
    sigma = simplicial_vertices(G)
    if not sigma <= bd:
        return fail(f"simplicial vertices {sorted(sigma - bd)} outside the boundary", G=G)
    R = srg(G)
    if is_complete(R) != (bd == sigma):
        return fail(f"G_SR complete: {is_complete(R)}; boundary == simplicial: {bd == sigma}", G=G)
    return ok()


def check_lemma9(gs: list[Graph]) -> Outcome:
    (G,) = gs
    bad = cut_vertices(G) & boundary(G).boundary
    if bad:
        return fail(f"cut vertices {sorted(bad)} in the boundary", G=G)
    return ok()


def check_prop10(gs: list[Graph]) -> Outcome:
    (G,) = gs
    cuts = cut_vertices(G)
    if not all(G.degree(v) <= 1 or v in cuts for v in range(G.n)):
        return na("some vertex of degree > 1 is not a cut vertex")
    eps = sum(1 for v in range(G.n) if G.degree(v) == 1)
    R = srg(G)
    if not (R.n == eps and is_complete(R)):
        return fail(f"G_SR is not K_{eps}", G=G, G_SR=R)
    return ok()


def _same_labeled(A: Graph, B: Graph) -> bool:
    return A.vertex_labels() == B.vertex_labels() and A == B


def check_prop11(gs: list[Graph]) -> Outcome:
    (G,) = gs
    if _diam(G) != 2:
        return na("diameter is not two")
    R, S = srg(G), g_star_minus(G)
    if not (_same_labeled(R, S) or _iso(R, S)):
        return fail("G_SR differs from G*_-", G=G, G_SR=R, G_star_minus=S)
    return ok()


def check_theorem12(gs: list[Graph]) -> Outcome:
    # compared with isolated non-boundary vertices kept: a universal vertex is
    # isolated in the complement but never lies in the boundary
    (G,) = gs
    R = srg_plus_i(G)
    C = complement(G)
    hyp = _diam(G) == 2 and is_true_twin_free(G)
    if hyp:
        holds = R == C or _iso(R, C)
    else:
        holds = R.edge_count == C.edge_count and _iso(R, C)
    if holds != hyp:
        return fail(f"G_SR+I ≅ complement is {holds}, hypothesis is {hyp}", G=G, G_SR=srg(G))
    return ok()


def check_prop13(gs: list[Graph]) -> Outcome:
    (G,) = gs
    R = srg(G)
    parts = complete_bipartite_parts(R)
    if parts is None:
        return ok()
    r, s = parts
    if r == 1 and (s != 1 or not is_path_graph(G)):
        if s == 1 and not is_path_graph(G):
            return fail("G_SR ≅ K_2 but G is not a path", G=G, G_SR=R)
        if s != 1:
            return fail(f"G_SR ≅ K_1,{s}", G=G, G_SR=R)
    if r == 2 or s == 2:
        return fail(f"G_SR ≅ K_{r},{s}", G=G, G_SR=R)
    if r == 1 and s == 1 and not is_path_graph(G):
        return fail("G_SR ≅ K_2 but G is not a path", G=G, G_SR=R)
    return ok()


def check_cor17(gs: list[Graph]) -> Outcome:
    (G,) = gs
    if not G.is_connected():
        return na("disconnected")
    if _diam(G) < 4 or not is_false_twin_free(G):
        return na("needs a false twin-free graph of diameter >= 4")
    H = complement(G)
    if not is_true_twin_free(H) or _diam(H) != 2:
        return fail("complement is not a true twin-free diameter-two graph", G=G, H=H)
    R = srg(H)
    if not _iso(R, G):
        return fail("complement's SR graph is not G", G=G, H_SR=R)
    return ok()


def check_remark41(gs: list[Graph]) -> Outcome:
    (G,) = gs
    if not G.is_connected():
        return na("disconnected")
    applied = False
    star = g_star(G)
    if _max_degree(G) <= G.n - 2:
        applied = True
        J = fam.join_k1(G)
        R = srg(J)
        if not (_same_labeled(R, star) or _iso(R, star)):
            return fail("G* differs from (K_1+G)_SR", G=G, G_star=star, join_SR=R)
    if _diam(G) <= 2:
        applied = True
        R, S = srg(G), g_star_minus(G)
        if not (_same_labeled(R, S) or _iso(R, S)):
            return fail("G*_- differs from G_SR", G=G)
    if is_true_twin_free(G):
        applied = True
        if star != complement(G):
            return fail("G* differs from the complement of a twin-free graph", G=G)
    return ok() if applied else na("no item applies")


# ---------------------------------------------------------------------------
# Realization statements
# ---------------------------------------------------------------------------


def check_realized(gs: list[Graph]) -> Outcome:
    """``srg(G) ≅ H`` for an explicit construction ``G``."""
    _need_orders(gs, 2)
    G, H = gs
    R = srg(G)
    if not _iso(R, H):
        return fail("construction's SR graph is not the target", G=G, H=H, G_SR=R)
    return ok()


# ---------------------------------------------------------------------------
# Cartesian sum and corona distances
# ---------------------------------------------------------------------------


def check_prop19(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if G.n < 2 or H.n < 2 or (is_complete(G) and is_complete(H)):
        return na("needs nontrivial factors, one noncomplete")
    D = _diam(product(ProductKind.CARTESIAN_SUM, G, H))
    claims = []
    if _is_edgeless(H):
        claims.append(("(i)", max(2, _diam(G))))
    if _has_isolated(G) and _has_isolated(H):
        claims.append(("(ii)", INF))
    if not _has_isolated(G) and not _has_isolated(H):
        claims.append(("(iii)", 2))
    if _diam(H) <= 2:
        claims.append(("(iv)", 2))
    if _diam(H) > 2 and not _has_isolated(H) and G.edge_count > 0 and _has_isolated(G):
        claims.append(("(v)", 3))
    if not claims:
        return na("no item applies")
    for item, value in claims:
        if D != value:
            return fail(f"item {item}: diameter {D}, claimed {value}", G=G, H=H)
    return ok()


def check_eq3(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    C = product(ProductKind.CORONA, G, H)
    dm = C.distances
    verts: list = list(range(G.n)) + [(i, b) for i in range(G.n) for b in range(H.n)]
    for x in verts:
        for y in verts:
            f = product_distance(ProductKind.CORONA, G, H, x, y)
            real = dm[corona_index(G, H, x), corona_index(G, H, y)]
            if f != real:
                return fail(f"d({x},{y}) formula {f}, BFS {real}", G=G, H=H)
    return ok()


# ---------------------------------------------------------------------------
# Cartesian and direct products
# ---------------------------------------------------------------------------


def _require_connected(*graphs: Graph) -> Outcome | None:
    if not all(g.is_connected() and g.n >= 1 for g in graphs):
        return na("factors must be connected")
    return None


def check_theorem20(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if (bad := _require_connected(G, H)) is not None:
        return bad
    left = srg(product(ProductKind.CARTESIAN, G, H))
    right = product(ProductKind.DIRECT, srg(G), srg(H))
    if not _iso(left, right):
        return fail("(G□H)_SR is not G_SR × H_SR", G=G, H=H, lhs=left, rhs=right)
    return ok()


def _bipartite_with_pm(G: Graph) -> bool:
    return is_bipartite(G) and has_bipartite_perfect_matching(G)


def check_theorem21(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if (bad := _require_connected(G, H)) is not None:
        return bad
    if not _bipartite_with_pm(srg(H)):
        return na("H_SR is not bipartite with a perfect matching")
    for comp in _component_graphs(srg(G)):
        if not (is_hamiltonian(comp) or has_perfect_matching(comp)):
            return na("a component of G_SR is neither Hamiltonian nor perfectly matchable")
    R = srg(product(ProductKind.CARTESIAN, G, H))
    if not _bipartite_with_pm(R):
        return fail("(G□H)_SR lacks a bipartite perfect matching", G=G, H=H, lhs=R)
    return ok()


def check_cor23(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if not is_two_antipodal(G) or not G.is_connected():
        return na("G is not 2-antipodal")
    if not (is_two_antipodal(H) or (H.is_connected() and boundary(H).boundary == simplicial_vertices(H))):
        return na("H is neither 2-antipodal nor a connected graph with boundary = simplicial set")
    R = srg(product(ProductKind.CARTESIAN, G, H))
    if not _bipartite_with_pm(R):
        return fail("(G□H)_SR lacks a bipartite perfect matching", G=G, H=H, lhs=R)
    return ok()


def check_lemma24(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if (bad := _require_connected(G, H)) is not None:
        return bad
    same = _iso(product(ProductKind.CARTESIAN, G, H), product(ProductKind.DIRECT, G, H))
    odd_cycles = (
        _cycle_order(G) is not None and G.n % 2 == 1 and _iso(G, H)
    )
    if same != odd_cycles:
        return fail(f"G□H ≅ G×H is {same}, G ≅ H odd cycle is {odd_cycles}", G=G, H=H)
    return ok()


def check_remark25(gs: list[Graph]) -> Outcome:
    (G,) = gs
    if _cycle_order(G) is None or G.n % 2 == 0:
        return na("needs an odd cycle")
    P = product(ProductKind.DIRECT, G, G)
    if not _iso(srg(P), P):
        return fail("odd-cycle direct square differs from its SR graph", G=G)
    return ok()


def _pair_label(g: str, h: str) -> str:
    return f"({g},{h})"


def check_theorem27(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, Kn = gs
    G = _indexed(G)
    n = Kn.n
    if not is_complete(Kn) or n < 3:
        return na("second factor must be K_n with n >= 3")
    if not G.is_connected() or G.n < 3 or not is_2mmf(G):
        return na("G must be a connected 2MMF graph of order >= 3")
    Kn = _indexed(Kn)
    Nn = _empty_on(list(Kn.vertex_labels()))
    lhs = srg(product(ProductKind.DIRECT, G, Kn))
    rhs = product(ProductKind.CARTESIAN, G, Nn)
    if not is_complete(G):
        rhs = overlay(rhs, product(ProductKind.LEXICOGRAPHIC, srg(G), Nn))
    W = sorted(vertices_in_triangles(G))
    if W:
        NW = _empty_on([G.label(w) for w in W])
        rhs = overlay(rhs, product(ProductKind.CARTESIAN, NW, Kn))
    if not _iso(lhs, rhs):
        return fail("(G×K_n)_SR differs from the stated overlay", G=G, K_n=Kn, lhs=lhs, rhs=rhs)
    return ok()


def _complete_pair(gs: list[Graph]) -> tuple[Graph, Graph] | Outcome:
    _need_orders(gs, 2)
    A, B = gs
    if not (is_complete(A) and is_complete(B) and A.n >= 3 and B.n >= 3):
        return na("needs K_r, K_t with r, t >= 3")
    return A, B


def check_cor28(gs: list[Graph]) -> Outcome:
    pair = _complete_pair(gs)
    if isinstance(pair, Outcome):
        return pair
    A, B = pair
    lhs = srg(product(ProductKind.DIRECT, A, B))
    if not _iso(lhs, product(ProductKind.CARTESIAN, A, B)):
        return fail("(K_r×K_t)_SR is not K_r□K_t", K_r=A, K_t=B)
    return ok()


def check_cor29(gs: list[Graph]) -> Outcome:
    pair = _complete_pair(gs)
    if isinstance(pair, Outcome):
        return pair
    A, B = pair
    P = product(ProductKind.DIRECT, A, B)
    if not _iso(srg(srg(P)), P):
        return fail("SR graph applied twice does not return K_r×K_t", K_r=A, K_t=B)
    return ok()


def check_prop30(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    C, Kt = gs
    cyc = _cycle_order(C)
    t = Kt.n
    if cyc is None or C.n < 4 or not is_complete(Kt) or t < 3:
        return na("needs C_r (r >= 4) and K_t (t >= 3)")
    r = C.n
    # relabel so that u_i is the i-th vertex along the cycle
    pos = {v: i for i, v in enumerate(cyc)}
    Cr = _relabel(C, [str(pos[v]) for v in range(r)])
    Kt = _indexed(Kt)
    Nt = _empty_on(list(Kt.vertex_labels()))
    lhs = srg(product(ProductKind.DIRECT, Cr, Kt))
    if r in (4, 5):
        rhs = _copies(fam.complete(r), t)
        item = "(i)"
    elif r % 2 == 0:
        rhs = product(ProductKind.CARTESIAN, Cr, Nt)
        for i in range(r // 2):
            K2 = _complete_on([str(i), str(i + r // 2)])
            rhs = overlay(rhs, product(ProductKind.LEXICOGRAPHIC, K2, Nt))
        item = "(ii)"
    else:
        star = fam.cycle_star(r)
        star = _relabel(star, [lab[1:] for lab in star.vertex_labels()])
        rhs = overlay(
            product(ProductKind.CARTESIAN, Cr, Nt), product(ProductKind.LEXICOGRAPHIC, star, Nt)
        )
        item = "(iii)"
    if not _iso(lhs, rhs):
        return fail(f"item {item} fails for r={r}, t={t}", C_r=Cr, K_t=Kt, lhs=lhs, rhs=rhs)
    return ok()


def check_prop31(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    P, Kt = gs
    order = _path_order(P)
    t = Kt.n
    if order is None or P.n < 2 or not is_complete(Kt) or t < 3:
        return na("needs P_r (r >= 2) and K_t (t >= 3)")
    r = P.n
    pos = {v: i for i, v in enumerate(order)}
    Pr = _relabel(P, [str(pos[v] + 1) for v in range(r)])
    Kt = _indexed(Kt)
    Nt = _empty_on(list(Kt.vertex_labels()))
    lhs = srg(product(ProductKind.DIRECT, Pr, Kt))
    if r in (2, 3):
        rhs = _copies(fam.complete(r), t)
    else:
        ends = _complete_on(["1", str(r)])
        rhs = overlay(
            product(ProductKind.CARTESIAN, Pr, Nt), product(ProductKind.LEXICOGRAPHIC, ends, Nt)
        )
    if not _iso(lhs, rhs):
        return fail(f"r={r}, t={t}", P_r=Pr, K_t=Kt, lhs=lhs, rhs=rhs)
    return ok()


def check_remark32(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    B, Kn = gs
    parts = complete_bipartite_parts(B)
    if parts is None or not is_complete(Kn) or Kn.n < 3:
        return na("needs K_r,t and K_n with n >= 3")
    lhs = srg(product(ProductKind.DIRECT, B, Kn))
    if not _iso(lhs, _copies(fam.complete(B.n), Kn.n)):
        return fail("(K_r,t×K_n)_SR is not n copies of K_r+t", K_rt=B, K_n=Kn, lhs=lhs)
    return ok()


def _c5_hyp(G: Graph) -> bool:
    return G.is_connected() and not is_bipartite(G) and is_triangle_free(G) and is_c5_connected(G)


def check_theorem33(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, B = gs
    parts = complete_bipartite_parts(B)
    if parts is None or max(parts) < 2:
        return na("second factor must be K_k,l with max(k,l) >= 2")
    if G.n < 2 or not _c5_hyp(G):
        return na("G must be nonbipartite, triangle-free and C5-connected")
    lhs = srg(product(ProductKind.DIRECT, G, B))
    rhs = product(ProductKind.CARTESIAN, fam.empty(G.n), fam.complete(B.n))
    if not _iso(lhs, rhs):
        return fail("(G×K_k,l)_SR is not N_n□K_k+l", G=G, K_kl=B, lhs=lhs)
    return ok()


def check_theorem34(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    for X in (G, H):
        if not _c5_hyp(X) or _diam(X) != 2:
            return na("factors must be nonbipartite triangle-free C5-connected of diameter two")
    lhs = srg(product(ProductKind.DIRECT, G, H))
    if not _iso(lhs, product(ProductKind.CARTESIAN, G, H)):
        return fail("(G×H)_SR is not G□H", G=G, H=H, lhs=lhs)
    return ok()


# ---------------------------------------------------------------------------
# Cartesian sum and strong product
# ---------------------------------------------------------------------------


def check_prop35(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if G.n < 2 or H.n < 2 or (is_complete(G) and is_complete(H)):
        return na("needs nontrivial factors, one noncomplete")
    if not (_diam(G) <= 2 or (not _has_isolated(G) and not _has_isolated(H))):
        return na("needs D(G) <= 2 or no isolated vertices in either factor")
    S = product(ProductKind.CARTESIAN_SUM, G, H)
    lhs, rhs = srg(S), g_star_minus(S)
    if not (_same_labeled(lhs, rhs) or _iso(lhs, rhs)):
        return fail("(G⊕H)_SR differs from (G⊕H)*_-", G=G, H=H, lhs=lhs, rhs=rhs)
    return ok()


def _nontrivial_connected(*graphs: Graph) -> bool:
    return all(g.n >= 2 and g.is_connected() for g in graphs)


def check_lemma36(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if not _nontrivial_connected(G, H):
        return na("factors must be connected and nontrivial")
    S = product(ProductKind.STRONG, G, H)
    rel = mmd_relation(S)
    rg, rh = mmd_relation(G), mmd_relation(H)
    dG, dH = G.distances, H.distances
    nh = H.n
    for p in range(S.n):
        for q in range(p + 1, S.n):
            u, v = divmod(p, nh)
            x, y = divmod(q, nh)
            mg, mh = rg.is_mmd(u, x), rh.is_mmd(v, y)
            cond = (
                (mg and mh)
                or (mg and v == y)
                or (mh and u == x)
                or (mg and dG[u, x] > dH[v, y])
                or (mh and dG[u, x] < dH[v, y])
            )
            if cond != rel.is_mmd(p, q):
                return fail(f"pair {S.label(p)}, {S.label(q)}: MMD {rel.is_mmd(p, q)}, conditions {cond}", G=G, H=H)
    return ok()


def check_theorem37(gs: list[Graph]) -> Outcome:
    from .iso import is_spanning_subgraph

    _need_orders(gs, 2)
    G, H = gs
    if not (G.is_connected() and H.is_connected()):
        return na("factors must be connected")
    G, H = _indexed(G), _indexed(H)
    GI, HI = srg_plus_i(G), srg_plus_i(H)
    low = product(ProductKind.STRONG, GI, HI)
    mid = srg_plus_i(product(ProductKind.STRONG, G, H))
    high = product(ProductKind.CARTESIAN_SUM, GI, HI)
    if not is_spanning_subgraph(low, mid):
        return fail("G_SR+I⊠H_SR+I is not a spanning subgraph of (G⊠H)_SR+I", G=G, H=H)
    if not is_spanning_subgraph(mid, high):
        return fail("(G⊠H)_SR+I is not a spanning subgraph of G_SR+I⊕H_SR+I", G=G, H=H)
    return ok()


# ---------------------------------------------------------------------------
# Lexicographic product
# ---------------------------------------------------------------------------


def _lex_setting(gs: list[Graph]) -> tuple[Graph, Graph] | Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if not _nontrivial_connected(G) or H.n < 2:
        return na("needs G connected nontrivial and H nontrivial")
    return G, H


def check_theorem38(gs: list[Graph]) -> Outcome:
    st = _lex_setting(gs)
    if isinstance(st, Outcome):
        return st
    G, H = st
    L = product(ProductKind.LEXICOGRAPHIC, G, H)
    nh = H.n
    full_h = H.all_mask
    dm = L.distances
    for a in range(G.n):
        for b in range(nh):
            p = a * nh + b
            expected = 0
            for c in iter_bits(G.adj[a]):
                expected |= full_h << (c * nh)
            expected |= H.adj[b] << (a * nh)
            if L.adj[p] != expected:
                return fail(f"neighbourhood of {L.label(p)} differs", G=G, H=H)
            for c in range(G.n):
                for d in range(nh):
                    f = product_distance(ProductKind.LEXICOGRAPHIC, G, H, (a, b), (c, d))
                    if f != dm[p, c * nh + d]:
                        return fail(f"distance {L.label(p)} to ({c},{d}): formula {f}", G=G, H=H)
    return ok()


def check_lemma39(gs: list[Graph]) -> Outcome:
    st = _lex_setting(gs)
    if isinstance(st, Outcome):
        return st
    G, H = st
    L = product(ProductKind.LEXICOGRAPHIC, G, H)
    rel, rg = mmd_relation(L), mmd_relation(G)
    nh = H.n
    for a in range(G.n):
        for b in range(G.n):
            if a == b or true_twins(G, a, b):
                continue
            for x in range(nh):
                for y in range(nh):
                    if rel.is_mmd(a * nh + x, b * nh + y) != rg.is_mmd(a, b):
                        return fail(f"pair ({a},{x}), ({b},{y})", G=G, H=H)
    return ok()


def check_lemma40(gs: list[Graph]) -> Outcome:
    st = _lex_setting(gs)
    if isinstance(st, Outcome):
        return st
    G, H = st
    twins = [(a, b) for a in range(G.n) for b in range(G.n) if a != b and true_twins(G, a, b)]
    if not twins:
        return na("G has no true twins")
    L = product(ProductKind.LEXICOGRAPHIC, G, H)
    rel = mmd_relation(L)
    nh = H.n
    for a, b in twins:
        for x in range(nh):
            for y in range(nh):
                claim = H.degree(x) == nh - 1 and H.degree(y) == nh - 1
                if rel.is_mmd(a * nh + x, b * nh + y) != claim:
                    return fail(f"twins {a},{b} with ({x},{y})", G=G, H=H)
    return ok()


def check_lemma41b(gs: list[Graph]) -> Outcome:
    st = _lex_setting(gs)
    if isinstance(st, Outcome):
        return st
    G, H = st
    L = product(ProductKind.LEXICOGRAPHIC, G, H)
    rel = mmd_relation(L)
    star = g_star(H)
    nh = H.n
    for a in range(G.n):
        for x in range(nh):
            for y in range(x + 1, nh):
                if rel.is_mmd(a * nh + x, a * nh + y) != star.has_edge(x, y):
                    return fail(f"copy {a}, vertices {x},{y}", G=G, H=H)
    return ok()


def _check_lex_formula(lhs: Graph, rhs: Graph, G: Graph, H: Graph, what: str) -> Outcome:
    if not _iso(lhs, rhs):
        return fail(f"(G∘H)_SR differs from {what}", G=G, H=H, lhs=lhs, rhs=rhs)
    return ok()


def check_prop42(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if not G.is_connected() or G.n < 2 or not is_true_twin_free(G):
        return na("G must be connected, of order >= 2 and true twin-free")
    if H.n < 2 or is_complete(H):
        return na("H must be noncomplete of order >= 2")
    lhs = srg(product(ProductKind.LEXICOGRAPHIC, G, H))
    Hs = g_star(H)
    rest = len(boundary(G).boundary)
    rhs = _union(product(ProductKind.LEXICOGRAPHIC, srg(G), Hs), _copies(g_star_minus(H), G.n - rest))
    return _check_lex_formula(lhs, rhs, G, H, "(G_SR∘H*) ∪ copies of H*_-")


def check_prop43(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, K = gs
    if not G.is_connected() or G.n < 2:
        return na("G must be connected of order >= 2")
    if not is_complete(K) or K.n < 2:
        return na("second factor must be K_n' with n' >= 2")
    lhs = srg(product(ProductKind.LEXICOGRAPHIC, G, K))
    rest = G.n - len(boundary(G).boundary)
    rhs = _union(product(ProductKind.LEXICOGRAPHIC, srg(G), K), _copies(K, rest))
    return _check_lex_formula(lhs, rhs, G, K, "(G_SR∘K_n') ∪ copies of K_n'")


def _low_degree(H: Graph) -> bool:
    return H.n >= 2 and _max_degree(H) <= H.n - 2


def check_prop44(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    K, H = gs
    if not is_complete(K) or K.n < 2:
        return na("first factor must be K_n with n >= 2")
    if not _low_degree(H):
        return na("H needs maximum degree <= n'-2")
    lhs = srg(product(ProductKind.LEXICOGRAPHIC, K, H))
    return _check_lex_formula(lhs, _copies(g_star(H), K.n), K, H, "n copies of H*")


def check_prop45(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if not G.is_connected() or G.n < 2 or is_complete(G):
        return na("G must be connected, noncomplete, of order >= 2")
    if not _low_degree(H):
        return na("H needs maximum degree <= n'-2")
    lhs = srg(product(ProductKind.LEXICOGRAPHIC, G, H))
    Hs = g_star(H)
    S = srs(G)
    rest = G.n - len(boundary(G).tf_boundary)
    first = product(ProductKind.LEXICOGRAPHIC, S, Hs) if S.n else Graph(0, [])
    rhs = _union(first, _copies(Hs, rest))
    return _check_lex_formula(lhs, rhs, G, H, "(G_SRS∘H*) ∪ copies of H*")


# ---------------------------------------------------------------------------
# Corona product
# ---------------------------------------------------------------------------


def check_corona_complete(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, H = gs
    if not G.is_connected():
        return na("G must be connected")
    R = srg(product(ProductKind.CORONA, G, H))
    claim = is_complete(H) or _is_edgeless(H)
    if is_complete(R) != claim:
        return fail(f"(G⊙H)_SR complete is {is_complete(R)}, H complete/empty is {claim}", G=G, H=H)
    return ok()


def check_srs_example(gs: list[Graph]) -> Outcome:
    _need_orders(gs, 2)
    G, K = gs
    if not G.is_connected() or G.n < 2 or not is_complete(K) or K.n < 2:
        return na("needs connected G of order >= 2 and K_n' with n' >= 2")
    C = product(ProductKind.CORONA, G, K)
    view = boundary(C)
    if view.tf_boundary != view.boundary:
        return fail("TF-boundary differs from boundary", G=G, K=K)
    n, m = G.n, K.n
    if not _iso(srg(C), fam.complete(n * m)):
        return fail("(G⊙K_n')_SR is not complete", G=G, K=K)
    if not _iso(srs(C), fam.complete_multipartite([m] * n)):
        return fail("(G⊙K_n')_SRS is not complete multipartite", G=G, K=K)
    return ok()


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    id: str
    check: Callable[[list[Graph]], Outcome]
    arity: int

    @property
    def builds_product(self) -> bool:
        return self.arity == 2 and self.check is not check_realized


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("T3/T4", check_reduction, 1),
        Theorem("T5", check_gallai, 1),
        Theorem("OBS1", check_obs1, 1),
        Theorem("OBS2", check_obs2, 1),
        Theorem("R1", check_remark1, 1),
        Theorem("R2", check_remark2, 1),
        Theorem("L6", check_lemma6, 1),
        Theorem("L7", check_lemma7, 1),
        Theorem("T8", check_theorem8, 1),
        Theorem("L9", check_lemma9, 1),
        Theorem("P10", check_prop10, 1),
        Theorem("P11", check_prop11, 1),
        Theorem("T12", check_theorem12, 1),
        Theorem("P13", check_prop13, 1),
        Theorem("P15", check_realized, 2),
        Theorem("P16", check_realized, 2),
        Theorem("C17", check_cor17, 1),
        Theorem("P19", check_prop19, 2),
        Theorem("EQ3", check_eq3, 2),
        Theorem("T20", check_theorem20, 2),
        Theorem("T21", check_theorem21, 2),
        Theorem("C23", check_cor23, 2),
        Theorem("L24", check_lemma24, 2),
        Theorem("R25", check_remark25, 1),
        Theorem("T27", check_theorem27, 2),
        Theorem("C28", check_cor28, 2),
        Theorem("C29", check_cor29, 2),
        Theorem("P30", check_prop30, 2),
        Theorem("P31", check_prop31, 2),
        Theorem("R32", check_remark32, 2),
        Theorem("T33", check_theorem33, 2),
        Theorem("T34", check_theorem34, 2),
        Theorem("P35", check_prop35, 2),
        Theorem("L36", check_lemma36, 2),
        Theorem("T37", check_theorem37, 2),
        Theorem("T38", check_theorem38, 2),
        Theorem("L39", check_lemma39, 2),
        Theorem("L40", check_lemma40, 2),
        Theorem("R41", check_remark41, 1),
        Theorem("L41b", check_lemma41b, 2),
        Theorem("P42", check_prop42, 2),
        Theorem("P43", check_prop43, 2),
        Theorem("P44", check_prop44, 2),
        Theorem("P45", check_prop45, 2),
        Theorem("COR-SR", check_corona_complete, 2),
        Theorem("SRS-EX", check_srs_example, 2),
    ]
}

ALIASES = {"T3": "T3/T4", "T4": "T3/T4"}


def resolve_id(tid: str) -> str:
    key = ALIASES.get(tid.upper(), tid)
    for k in THEOREMS:
        if k.lower() == key.lower():
            return k
    raise InvalidParameter(f"unknown theorem id {tid!r}; known: {', '.join(THEOREMS)}")


@lru_cache(maxsize=1)
def load_grids() -> dict:
    text = resources.files("srgraph").joinpath("data/grids.toml").read_text(encoding="utf-8")
    return tomllib.loads(text)


def grid_instances(tid: str) -> list[str]:
    cfg = load_grids().get(tid, {})
    out = [x if isinstance(x, str) else ";".join(x) for x in cfg.get("instances", [])]
    if "cross" in cfg:
        out += [";".join(c) for c in all_combinations(*cfg["cross"])]
    return out


def parse_instance(text: str) -> list[Graph]:
    return [fam.parse_spec(s) for s in text.split(";") if s.strip()]


# ---------------------------------------------------------------------------
# Exhaustive pass
# ---------------------------------------------------------------------------


@dataclass
class _Tally:
    checked: int = 0
    not_applicable: int = 0
    failure: tuple | None = None  # (order, mask, detail, graphs as graph6)


def _exhaustive_chunk(ids: tuple[str, ...], order: int, connected: bool, start: int, stop: int) -> dict:
    tallies = {tid: _Tally() for tid in ids}
    for k, G in enumerate(fam.enumerate_graphs(order, connected_only=connected, start=start, stop=stop)):
        for tid in ids:
            t = tallies[tid]
            if t.failure is not None:
                continue
            out = THEOREMS[tid].check([G])
            if out.status == "pass":
                t.checked += 1
            elif out.status == "n/a":
                t.not_applicable += 1
            else:
                graphs = {name: emit_graph6(g) for name, g in out.graphs.items() if g.n <= 62}
                t.failure = (order, emit_graph6(G), out.detail, graphs)
    return {tid: (t.checked, t.not_applicable, t.failure) for tid, t in tallies.items()}


def _chunks(order: int, parts: int) -> list[tuple[int, int]]:
    total = 1 << (order * (order - 1) // 2)
    step = max(1, -(-total // parts))
    return [(s, min(total, s + step)) for s in range(0, total, step)]


def exhaustive_checks(
    ids: list[str], max_order: int | None = None, jobs: int = 1
) -> dict[str, tuple[int, int, tuple | None, str]]:
    """Run several exhaustive statements over one shared enumeration.

    Returns ``id -> (checked, not_applicable, failure, description)``.
    """
    grids = load_grids()
    plans: dict[tuple[int, bool], list[str]] = {}
    ranges: dict[str, tuple[int, int, bool]] = {}
    for tid in ids:
        ex = grids[tid]["exhaustive"]
        lo = ex.get("min_order", 1)
        hi = ex.get("max_order", EXHAUSTIVE_MAX_ORDER) if max_order is None else max_order
        if hi > EXHAUSTIVE_MAX_ORDER:
            raise GridTooLarge(f"exhaustive checks limited to order {EXHAUSTIVE_MAX_ORDER}")
        connected = not ex.get("all_graphs", False)
        ranges[tid] = (lo, hi, connected)
        for n in range(lo, hi + 1):
            plans.setdefault((n, connected), []).append(tid)
    totals = {tid: [0, 0, None] for tid in ids}
    tasks = []
    for (n, connected), tids in sorted(plans.items()):
        parts = jobs * 4 if jobs > 1 and n >= 6 else 1
        for s, e in _chunks(n, parts):
            tasks.append((tuple(tids), n, connected, s, e))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    for res in results:
        for tid, (c, nap, failure) in res.items():
            tot = totals[tid]
            tot[0] += c
            tot[1] += nap
            if failure is not None and tot[2] is None:
                tot[2] = failure
    out = {}
    for tid in ids:
        lo, hi, connected = ranges[tid]
        kind = "connected labeled graphs" if connected else "labeled graphs"
        desc = f"all {kind} of order {lo}..{hi}"
        c, nap, failure = totals[tid]
        out[tid] = (c, nap, failure, desc)
    return out


def _run_task(task: tuple) -> dict:
    return _exhaustive_chunk(*task)


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _replay(tid: str, specs: list[str]) -> str:
    return f"srgraph verify --theorem {tid} --instance {shlex.quote(';'.join(specs))}"


def _order_ok(graphs: list[Graph], max_order: int | None) -> bool:
    return max_order is None or all(g.n <= max_order for g in graphs)


def verify_theorem(
    tid: str,
    max_order: int | None = None,
    instances: list[str] | None = None,
    jobs: int = 1,
    exhaustive: dict | None = None,
) -> TheoremReport:
    """Check one statement on its grid (or on explicit ``instances``).

    ``max_order`` bounds the enumeration for exhaustive statements and
    drops grid instances with a larger operand.  ``exhaustive`` may carry a
    precomputed result of :func:`exhaustive_checks` for this statement.
    """
    tid = resolve_id(tid)
    thm = THEOREMS[tid]
    cfg = load_grids().get(tid, {})
    anchor = cfg.get("anchor", "")
    t0 = time.perf_counter()
    records: list[dict] = []
    counterexample = None

    def finish(verdict: str, reason: str = "") -> TheoremReport:
        ms = (time.perf_counter() - t0) * 1000
        return TheoremReport(tid, anchor, records, verdict, ms, reason, counterexample)

    if instances is None and "exhaustive" in cfg:
        res = exhaustive if exhaustive is not None else exhaustive_checks([tid], max_order, jobs)[tid]
        checked, nap, failure, desc = res
        records.append({"instance": desc, "status": "pass" if failure is None else "fail",
                        "checked": checked, "not_applicable": nap})
        if failure is not None:
            order, g6, detail, graphs = failure
            counterexample = {
                "instance": f"g6:{g6}",
                "detail": detail,
                "graphs": graphs,
                "replay": _replay(tid, [f"g6:{g6}"]),
            }
            return finish("FAIL")
    specs = instances if instances is not None else grid_instances(tid)
    for spec in specs:
        graphs = parse_instance(spec)
        if len(graphs) != thm.arity:
            raise InvalidParameter(f"{tid} instances take {thm.arity} graph(s): {spec!r}")
        if not _order_ok(graphs, max_order):
            continue
        if any(g.n > PRODUCT_MAX_ORDER for g in graphs) or (
            thm.builds_product and graphs[0].n * graphs[1].n > PRODUCT_MAX_ORDER
        ):
            raise GridTooLarge(f"instance {spec!r} exceeds product order {PRODUCT_MAX_ORDER}")
        out = thm.check(graphs)
        rec = {"instance": spec, "status": out.status}
        if out.detail and out.status == "n/a":
            rec["reason"] = out.detail
        records.append(rec)
        if out.status == "fail":
            g6 = [f"g6:{emit_graph6(g)}" for g in graphs]
            counterexample = {
                "instance": spec,
                "detail": out.detail,
                "graphs": {k: emit_graph6(g) for k, g in out.graphs.items() if g.n <= 62},
                "replay": _replay(tid, g6),
            }
            return finish("FAIL")
    if not any(r["status"] == "pass" for r in records):
        reasons = sorted({r.get("reason", "") for r in records if r["status"] == "n/a"})
        why = "no instance meets the hypotheses" + (f" ({'; '.join(reasons)})" if reasons else "")
        if not records:
            why = "no instance within the order bound"
        return finish("SKIPPED", why)
    return finish("PASS")


def verify_all(max_order: int | None = None, jobs: int = 1) -> list[TheoremReport]:
    grids = load_grids()
    ex_ids = [tid for tid in THEOREMS if "exhaustive" in grids.get(tid, {})]
    shared = exhaustive_checks(ex_ids, max_order, jobs)
    return [verify_theorem(tid, max_order, jobs=jobs, exhaustive=shared.get(tid)) for tid in THEOREMS]
