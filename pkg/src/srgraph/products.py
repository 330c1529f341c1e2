"""The six graph products and closed-form distance formulas for them.

Product vertices are numbered ``a * |H| + b`` for the pair ``(a, b)`` and
labelled ``"(g,h)"`` with the factor labels.  The corona ``G ⊙ H`` keeps
the vertices of ``G`` first (with their own labels) and then the copies
``H_0, H_1, ...``; vertex ``b`` of copy ``i`` is labelled ``"(i,h)"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product as cartesian_power
from typing import Union

from .errors import Disconnected, EmptyOperand, InvalidParameter, TrivialOperand, UnknownVertex
from .graph import INF, DistanceMatrix, Graph, bfs_layers, build_graph, is_bipartite, iter_bits

Vertex = Union[int, tuple[int, int]]


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"
    CARTESIAN_SUM = "cartesian_sum"
    CORONA = "corona"

    @classmethod
    def parse(cls, text: str) -> "ProductKind":
        key = text.strip().lower().replace("-", "_")
        aliases = {
            "box": "cartesian",
            "tensor": "direct",
            "times": "direct",
            "lex": "lexicographic",
            "sum": "cartesian_sum",
            "disjunctive": "cartesian_sum",
        }
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise InvalidParameter(f"unknown product kind {text!r}") from None


def _pair_labels(G: Graph, H: Graph) -> list[str]:
    gl, hl = G.vertex_labels(), H.vertex_labels()
    return [f"({g},{h})" for g in gl for h in hl]


def _expand(mask_g: int, mask_h: int, nh: int) -> int:
    """Bitmask of all pairs in ``mask_g x mask_h``."""
    out = 0
    for a in iter_bits(mask_g):
        out |= mask_h << (a * nh)
    return out


def product(kind: ProductKind | str, G: Graph, H: Graph) -> Graph:
    kind = ProductKind.parse(kind) if isinstance(kind, str) else kind
    if G.n == 0 or H.n == 0:
        raise EmptyOperand("products need nonempty factors")
    if kind is ProductKind.CORONA:
        return corona(G, H)
    nh = H.n
    full_g, full_h = G.all_mask, H.all_mask
    adj = []
    for a in range(G.n):
        for b in range(nh):
            if kind is ProductKind.CARTESIAN:
                m = _expand(G.adj[a], 1 << b, nh) | _expand(1 << a, H.adj[b], nh)
            elif kind is ProductKind.DIRECT:
                m = _expand(G.adj[a], H.adj[b], nh)
            elif kind is ProductKind.STRONG:
                m = _expand(G.closed_mask(a), H.closed_mask(b), nh) & ~(1 << (a * nh + b))
            elif kind is ProductKind.LEXICOGRAPHIC:
                m = _expand(G.adj[a], full_h, nh) | _expand(1 << a, H.adj[b], nh)
            else:  # CARTESIAN_SUM
                m = _expand(G.adj[a], full_h, nh) | _expand(full_g, H.adj[b], nh)
                m &= ~(1 << (a * nh + b))
            adj.append(m)
    return Graph(G.n * nh, adj, _pair_labels(G, H))


def corona(G: Graph, H: Graph) -> Graph:
    """``G ⊙ H``: copy ``i`` of ``H`` is joined to the ``i``-th vertex of ``G``."""
    if G.n == 0 or H.n == 0:
        raise EmptyOperand("products need nonempty factors")
    n, nh = G.n, H.n
    edges = list(G.edges())
    for i in range(n):
        base = n + i * nh
        edges.extend((base + u, base + v) for u, v in H.edges())
        edges.extend((i, base + b) for b in range(nh))
    labels = list(G.vertex_labels()) + [f"({i},{h})" for i in range(n) for h in H.vertex_labels()]
    if len(set(labels)) != len(labels):
        labels = [f"v{i}" for i in range(n)] + labels[n:]
    return build_graph(n + n * nh, edges, labels)


def corona_index(G: Graph, H: Graph, x: Vertex) -> int:
    """Index in ``G ⊙ H`` of base vertex ``i`` or of copy vertex ``(i, b)``."""
    if isinstance(x, tuple):
        i, b = x
        if not (0 <= i < G.n and 0 <= b < H.n):
            raise UnknownVertex(f"no corona vertex {x}")
        return G.n + i * H.n + b
    if not 0 <= x < G.n:
        raise UnknownVertex(f"no base vertex {x}")
    return x


def pair_index(G: Graph, H: Graph, x: tuple[int, int]) -> int:
    a, b = x
    if not (0 <= a < G.n and 0 <= b < H.n):
        raise UnknownVertex(f"no product vertex {x}")
    return a * H.n + b


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvenOddDistances:
    """Shortest even and shortest odd walk lengths (``INF`` when none exists)."""

    even: DistanceMatrix
    odd: DistanceMatrix


def even_odd_distances(G: Graph) -> EvenOddDistances:
    """BFS on the parity double cover: ``(v, p)`` with edges ``(u, p)(w, 1 - p)``."""
    n = G.n
    cover = [0] * (2 * n)
    for v in range(n):
        cover[v] = G.adj[v] << n
        cover[n + v] = G.adj[v]
    even, odd = [], []
    for s in range(n):
        row = [INF] * (2 * n)
        for d, layer in enumerate(bfs_layers(cover, s)):
            for x in iter_bits(layer):
                row[x] = d
        even.append(row[:n])
        odd.append(row[n:])
    return EvenOddDistances(DistanceMatrix(even), DistanceMatrix(odd))


def _eo(G: Graph) -> EvenOddDistances:
    eo = G._cache.get("even_odd")
    if eo is None:
        eo = even_odd_distances(G)
        G._cache["even_odd"] = eo
    return eo


def product_distance(kind: ProductKind | str, G: Graph, H: Graph, x: Vertex, y: Vertex):
    """Distance in the product computed from factor distances only.

    For :attr:`ProductKind.CORONA` a vertex is either a base index ``i`` or a
    pair ``(i, b)`` naming vertex ``b`` of the ``i``-th copy of ``H``.  The
    Cartesian sum has no closed form here and is answered by BFS on the
    constructed product.
    """
    kind = ProductKind.parse(kind) if isinstance(kind, str) else kind
    dG, dH = G.distances, H.distances
    if kind is ProductKind.CORONA:
        corona_index(G, H, x)
        corona_index(G, H, y)
        if not isinstance(x, tuple) and not isinstance(y, tuple):
            return dG[x, y]
        if not isinstance(x, tuple) or not isinstance(y, tuple):
            i = x if not isinstance(x, tuple) else y
            j = (y if isinstance(y, tuple) else x)[0]
            return dG[i, j] + 1
        (i, b), (j, d) = x, y
        if i != j:
            return dG[i, j] + 2
        return min(dH[b, d], 2)
    pair_index(G, H, x)  # type: ignore[arg-type]
    pair_index(G, H, y)  # type: ignore[arg-type]
    (a, b), (c, d) = x, y  # type: ignore[misc]
    if kind is ProductKind.CARTESIAN:
        return dG[a, c] + dH[b, d]
    if kind is ProductKind.STRONG:
        return max(dG[a, c], dH[b, d])
    if kind is ProductKind.DIRECT:
        eg, eh = _eo(G), _eo(H)
        best = INF
        for x, y in ((eg.even[a, c], eh.even[b, d]), (eg.odd[a, c], eh.odd[b, d])):
            m = max(x, y)
            # a walk is padded to length m by going back and forth along an edge,
            # which the empty walk at an isolated vertex cannot do
            if x < m and x == 0 and G.adj[a] == 0 or y < m and y == 0 and H.adj[b] == 0:
                continue
            best = min(best, m)
        return best
    if kind is ProductKind.LEXICOGRAPHIC:
        if G.n < 2:
            raise TrivialOperand("lexicographic distance formula needs a nontrivial first factor")
        if not G.is_connected():
            raise Disconnected("lexicographic distance formula needs a connected first factor")
        if a != c:
            return dG[a, c]
        return min(dH[b, d], 2)
    P = product(ProductKind.CARTESIAN_SUM, G, H)
    return P.distances[a * H.n + b, c * H.n + d]


def direct_is_connected(G: Graph, H: Graph) -> bool:
    """Connectivity of ``G × H``: both factors connected and not both bipartite."""
    if G.n < 2 or H.n < 2:
        raise TrivialOperand("criterion stated for nontrivial factors")
    return G.is_connected() and H.is_connected() and not (is_bipartite(G) and is_bipartite(H))


# ---------------------------------------------------------------------------
# Hamming graphs
# ---------------------------------------------------------------------------


def hamming(k: int, q: int) -> Graph:
    """``H(k, q)``: words of length ``k`` over ``q`` symbols, adjacent when they differ once."""
    if k < 1 or q < 1:
        raise InvalidParameter("hamming graph needs k >= 1 and q >= 1")
    kq = build_graph(q, [(i, j) for i in range(q) for j in range(i + 1, q)])
    G = kq
    for _ in range(k - 1):
        G = product(ProductKind.CARTESIAN, G, kq)
    # the folded power numbers words in base q, most significant letter first
    words = ["".join(str(c) for c in w) for w in cartesian_power(range(q), repeat=k)]
    if q > 10:
        words = [",".join(str(c) for c in w) for w in cartesian_power(range(q), repeat=k)]
    return G.with_labels(words)


def hypercube(k: int) -> Graph:
    return hamming(k, 2)
