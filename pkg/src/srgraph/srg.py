"""Mutually maximally distant vertices, the boundary, and the graphs built from them."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CompleteInput
from .graph import (
    INF,
    Graph,
    bfs_layers,
    is_complete,
    iter_bits,
    mask_of,
    remove_isolated,
)


@dataclass(frozen=True)
class MmdRelation:
    """``maximal[v]``: bitmask of vertices maximally distant from ``v``.

    ``mmd[v]``: bitmask of vertices mutually maximally distant with ``v``.
    """

    n: int
    maximal: tuple[int, ...]
    mmd: tuple[int, ...]

    def is_mmd(self, u: int, v: int) -> bool:
        return bool(self.mmd[u] >> v & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.mmd[u]) if u < v]

    def maximally_distant(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.maximal[v]))


@dataclass(frozen=True)
class BoundaryView:
    boundary: frozenset[int]
    tf_boundary: frozenset[int]


def _maximal_masks(G: Graph) -> tuple[int, ...]:
    # u at distance k from v is maximally distant iff no neighbour of u sits at k+1
    out = []
    for v in range(G.n):
        layers = bfs_layers(G.adj, v)
        m = 0
        for k, layer in enumerate(layers):
            if k == 0:
                continue
            beyond = layers[k + 1] if k + 1 < len(layers) else 0
            for u in iter_bits(layer):
                if not G.adj[u] & beyond:
                    m |= 1 << u
        out.append(m)
    return tuple(out)


def mmd_relation(G: Graph) -> MmdRelation:
    rel = G._cache.get("mmd")
    if rel is None:
        G.require_connected()
        maximal = _maximal_masks(G)
        mmd = tuple(
            mask_of(u for u in iter_bits(maximal[v]) if maximal[u] >> v & 1) for v in range(G.n)
        )
        rel = MmdRelation(G.n, maximal, mmd)
        G._cache["mmd"] = rel
    return rel


def maximally_distant_from(G: Graph, v: int) -> frozenset[int]:
    """Vertices ``u != v`` none of whose neighbours is farther from ``v`` than ``u``."""
    return mmd_relation(G).maximally_distant(v)


def boundary(G: Graph) -> BoundaryView:
    rel = mmd_relation(G)
    bd = frozenset(v for v in range(G.n) if rel.mmd[v])
    tf = frozenset(
        x for x in bd if any(G.closed_mask(x) != G.closed_mask(y) for y in iter_bits(rel.mmd[x]))
    )
    return BoundaryView(bd, tf)


def boundary_from_maximal_distance(G: Graph) -> frozenset[int]:
    """Union of all sets ``M_G(v)``: the boundary by its original definition."""
    rel = mmd_relation(G)
    m = 0
    for x in rel.maximal:
        m |= x
    return frozenset(iter_bits(m))


def _labels(G: Graph) -> tuple[str, ...]:
    return G.vertex_labels()


def srg(G: Graph) -> Graph:
    """Strong resolving graph on the boundary; edges are the MMD pairs.

    Vertices keep the labels of ``G`` (decimal indices when ``G`` is unlabeled)
    and appear in increasing order of their index in ``G``.
    """
    rel = mmd_relation(G)
    vs = [v for v in range(G.n) if rel.mmd[v]]
    return Graph(G.n, rel.mmd, _labels(G)).induced(vs)


def srg_plus_i(G: Graph) -> Graph:
    """Strong resolving graph on all of V(G); non-boundary vertices are isolated."""
    rel = mmd_relation(G)
    return Graph(G.n, rel.mmd, G.labels)


def srg_vertices(G: Graph) -> list[int]:
    """Indices in ``G`` of the vertices of :func:`srg`, in order."""
    rel = mmd_relation(G)
    return [v for v in range(G.n) if rel.mmd[v]]


def g_star(G: Graph) -> Graph:
    """Adjacent iff at distance >= 2 (unreachable counts) or true twins."""
    dm = G.distances
    adj = []
    for u in range(G.n):
        cu = G.closed_mask(u)
        m = 0
        for v in range(G.n):
            if v != u and (dm[u, v] >= 2 or cu == G.closed_mask(v)):
                m |= 1 << v
        adj.append(m)
    return Graph(G.n, adj, _labels(G))


def g_star_minus(G: Graph) -> Graph:
    return remove_isolated(g_star(G))


def srs(G: Graph) -> Graph:
    """Strong resolving TF-graph: MMD pairs that are not true twins."""
    if is_complete(G):
        raise CompleteInput("the TF-graph is defined for noncomplete graphs")
    rel = mmd_relation(G)
    adj = [
        mask_of(u for u in iter_bits(rel.mmd[v]) if G.closed_mask(u) != G.closed_mask(v))
        for v in range(G.n)
    ]
    return remove_isolated(Graph(G.n, adj, _labels(G)))


def is_2mmf(G: Graph) -> bool:
    """No MMD pair sits at distance exactly two."""
    rel = mmd_relation(G)
    dm = G.distances
    return all(dm[u, v] != 2 for u, v in rel.pairs())


__all__ = [
    "INF",
    "BoundaryView",
    "MmdRelation",
    "boundary",
    "boundary_from_maximal_distance",
    "g_star",
    "g_star_minus",
    "is_2mmf",
    "maximally_distant_from",
    "mmd_relation",
    "srg",
    "srg_plus_i",
    "srg_vertices",
    "srs",
]
