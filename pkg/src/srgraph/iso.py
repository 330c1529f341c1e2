"""Canonical forms and isomorphism tests for graphs of order at most 64.

The canonical labeling follows the individualization-refinement scheme:
colour refinement to an equitable partition, then a backtracking search
that individualizes one vertex of a target cell at a time.  Every leaf of
the search tree is a relabeling of the graph; the canonical form is the
lexicographically least adjacency encoding over all leaves.  Automorphisms
discovered along the way (two leaves with equal encodings, plus swaps of
twin vertices found up front) prune children that lie in the same orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LabelMismatch, OrderTooLarge
from .graph import Graph, iter_bits, triangle_count

CANONICAL_MAX_ORDER = 64


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant encoding of a graph.

    ``code`` is equal for two graphs exactly when they are isomorphic.
    ``perm[v]`` is the canonical position of vertex ``v``; ``graph`` is the
    relabeled graph itself.
    """

    code: bytes
    degrees: tuple[int, ...]
    triangles: int
    perm: tuple[int, ...]
    graph: Graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)


# ---------------------------------------------------------------------------
# Refinement
# ---------------------------------------------------------------------------


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement; colours are ranks that respect the input order."""
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nb))) for v, nb in enumerate(nbrs)]
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        colors = [rank[s] for s in sigs]
        if len(order) == ncls:
            return colors
        ncls = len(order)


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


class _Orbits:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _twin_swaps(adj: list[int], n: int) -> list[tuple[int, ...]]:
    # swapping u and v is an automorphism when N(u) - v == N(v) - u
    gens = []
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                g = list(range(n))
                g[u], g[v] = v, u
                gens.append(tuple(g))
    return gens


def _canonical_connected(adj: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least leaf code and the matching permutation for one component."""
    n = len(adj)
    nbrs = [list(iter_bits(a)) for a in adj]
    autos: list[tuple[int, ...]] = _twin_swaps(adj, n)
    leaves: dict[tuple[int, ...], tuple[int, ...]] = {}
    best: list = [None, None]

    def leaf(colors: list[int]) -> None:
        perm = tuple(colors)
        rows = [0] * n
        for v in range(n):
            m = 0
            for u in nbrs[v]:
                m |= 1 << perm[u]
            rows[perm[v]] = m
        code = tuple(rows)
        other = leaves.get(code)
        if other is not None:
            # perm^-1 then other gives an automorphism
            inv = [0] * n
            for v, p in enumerate(perm):
                inv[p] = v
            autos.append(tuple(inv[other[v]] for v in range(n)))
            return
        leaves[code] = perm
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, perm

    def search(colors: list[int], prefix: list[int]) -> None:
        cell = _target_cell(colors)
        if cell is None:
            leaf(colors)
            return
        tried: list[int] = []
        for v in cell:
            if tried:
                orbits = _Orbits(n)
                for g in autos:
                    if all(g[p] == p for p in prefix):
                        for x in range(n):
                            orbits.union(x, g[x])
                rv = orbits.find(v)
                if any(orbits.find(w) == rv for w in tried):
                    continue
            tried.append(v)
            ind = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
            search(_refine(nbrs, ind), prefix + [v])

    search(_refine(nbrs, [0] * n), [])
    return best[0], best[1]


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def canonical_form(G: Graph) -> CanonicalForm:
    cached = G._cache.get("canon")
    if cached is not None:
        return cached
    n = G.n
    if n > CANONICAL_MAX_ORDER:
        raise OrderTooLarge(f"canonical form limited to order {CANONICAL_MAX_ORDER}")
    parts = []
    for comp in G.component_masks():
        verts = list(iter_bits(comp))
        pos = {v: i for i, v in enumerate(verts)}
        sub = [0] * len(verts)
        for v in verts:
            for u in iter_bits(G.adj[v]):
                sub[pos[v]] |= 1 << pos[u]
        code, perm = _canonical_connected(sub)
        parts.append((len(verts), code, verts, perm))
    parts.sort(key=lambda p: (p[0], p[1]))
    full_perm = [0] * n
    rows: list[int] = []
    offset = 0
    for size, code, verts, perm in parts:
        for i, v in enumerate(verts):
            full_perm[v] = offset + perm[i]
        rows.extend(r << offset for r in code)
        offset += size
    code = n.to_bytes(1, "big") + b"".join(r.to_bytes(8, "little") for r in rows)
    labels = None
    if G.labels is not None:
        labels = [""] * n
        for v in range(n):
            labels[full_perm[v]] = G.labels[v]
    cf = CanonicalForm(
        code=code,
        degrees=tuple(sorted(G.degrees())),
        triangles=triangle_count(G),
        perm=tuple(full_perm),
        graph=Graph(n, rows, labels),
    )
    G._cache["canon"] = cf
    return cf


def isomorphism(G: Graph, H: Graph) -> dict[int, int] | None:
    """A vertex bijection ``G -> H`` preserving adjacency, or ``None``."""
    if G.n != H.n or G.edge_count != H.edge_count:
        return None
    if sorted(G.degrees()) != sorted(H.degrees()):
        return None
    cg, ch = canonical_form(G), canonical_form(H)
    if cg.triangles != ch.triangles or cg.code != ch.code:
        return None
    inv_h = [0] * H.n
    for v, p in enumerate(ch.perm):
        inv_h[p] = v
    mapping = {v: inv_h[cg.perm[v]] for v in range(G.n)}
    for u in range(G.n):
        image = 0
        for w in iter_bits(G.adj[u]):
            image |= 1 << mapping[w]
        if image != H.adj[mapping[u]]:
            raise AssertionError("canonical labels produced a non-isomorphism")
    return mapping


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return isomorphism(G, H) is not None


def is_spanning_subgraph(G: Graph, H: Graph) -> bool:
    """Every edge of ``G`` is an edge of ``H``, matching vertices by label."""
    lg, lh = G.vertex_labels(), H.vertex_labels()
    if sorted(lg) != sorted(lh) or len(set(lg)) != len(lg):
        raise LabelMismatch("spanning-subgraph test needs identical label sets")
    where = {x: i for i, x in enumerate(lh)}
    return all(H.has_edge(where[lg[u]], where[lg[v]]) for u, v in G.edges())
