"""Core graph representation, distances and structural predicates.

A :class:`Graph` stores one adjacency row per vertex as a Python ``int``
used as a bitset (bit ``u`` of ``adj[v]`` is set iff ``uv`` is an edge).
Graphs are immutable; derived data such as the distance matrix is computed
once and memoised on the instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    Disconnected,
    IndexOutOfRange,
    LoopEdge,
    MissingLabels,
    NotBipartite,
    OrderTooLarge,
)

#: Distance between vertices in different components.  ``math.inf`` is not
#: an ``int``, so it can never collide with a real distance, and sums or
#: maxima involving it stay infinite instead of wrapping around.
INF = math.inf

HAMILTONIAN_MAX_ORDER = 12
MATCHING_MAX_ORDER = 200
GENERAL_MATCHING_MAX_ORDER = 40


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    Two graphs compare equal when they have the same order and the same
    edge set under the identity map; labels are carried along but ignored
    by ``==``.
    """

    __slots__ = ("n", "adj", "labels", "_cache")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self._cache: dict = {}

    # -- basic queries -------------------------------------------------
    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __len__(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_labels(self) -> tuple[str, ...]:
        """Labels if present, otherwise the decimal indices."""
        return self.labels if self.labels is not None else tuple(str(v) for v in range(self.n))

    def index(self, label: str) -> int:
        if self.labels is None:
            raise MissingLabels("graph carries no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def indices(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)

    def names(self, vertices: Iterable[int]) -> list[str]:
        return [self.label(v) for v in sorted(vertices)]

    # -- derived graphs ------------------------------------------------
    def with_labels(self, labels: Sequence[str] | None) -> "Graph":
        return Graph(self.n, self.adj, labels)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices`` (kept in increasing order), labels preserved."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        adj = [mask_of(pos[u] for u in iter_bits(self.adj[v]) if u in pos) for v in vs]
        return Graph(len(vs), adj, [self.label(v) for v in vs])

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` moved to position ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = mask_of(perm[u] for u in iter_bits(self.adj[v]))
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for v in range(self.n):
                labels[perm[v]] = self.labels[v]
        return Graph(self.n, adj, labels)

    # -- distances and connectivity ------------------------------------
    @property
    def distances(self) -> "DistanceMatrix":
        dm = self._cache.get("dist")
        if dm is None:
            dm = all_pairs_distances(self)
            self._cache["dist"] = dm
        return dm

    def component_masks(self) -> list[int]:
        comps = self._cache.get("comps")
        if comps is None:
            comps = []
            left = self.all_mask
            while left:
                seed = left & -left
                comp = _reach(self.adj, seed)
                comps.append(comp)
                left &= ~comp
            self._cache["comps"] = comps
        return comps

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise Disconnected("operation requires a connected graph")


def _reach(adj: Sequence[int], seed: int, within: int = -1) -> int:
    seen = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def build_graph(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Graph:
    """Build a graph on ``n`` vertices from an edge list (duplicates collapse)."""
    if n < 0:
        raise IndexOutOfRange(f"negative order {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is not None:
        labels = [str(x) for x in labels]
        if len(labels) != n:
            raise IndexOutOfRange(f"{len(labels)} labels for {n} vertices")
        if len(set(labels)) != n:
            raise MissingLabels("labels must be unique")
    return Graph(n, adj, labels)


def graph_from_labeled_edges(
    edges: Iterable[tuple[str, str]], vertices: Sequence[str] | None = None
) -> Graph:
    """Build a labeled graph; vertex order is ``vertices`` or first appearance."""
    order: list[str] = list(vertices) if vertices is not None else []
    pos = {x: i for i, x in enumerate(order)}
    pairs = []
    for a, b in edges:
        for x in (a, b):
            if x not in pos:
                pos[x] = len(order)
                order.append(x)
        pairs.append((pos[a], pos[b]))
    return build_graph(len(order), pairs, order)


def complement(G: Graph) -> Graph:
    full = G.all_mask
    return Graph(G.n, [full & ~G.adj[v] & ~(1 << v) for v in range(G.n)], G.labels)


def overlay(G: Graph, H: Graph) -> Graph:
    """Union of two labeled graphs, identifying vertices with equal labels.

    Vertex order: the labels of ``G`` first, then the labels of ``H`` that
    ``G`` lacks, in ``H``'s order.
    """
    if G.labels is None or H.labels is None:
        raise MissingLabels("overlay identifies vertices by label")
    order = list(G.labels) + [x for x in H.labels if x not in set(G.labels)]
    pos = {x: i for i, x in enumerate(order)}
    edges = [(pos[G.labels[u]], pos[G.labels[v]]) for u, v in G.edges()]
    edges += [(pos[H.labels[u]], pos[H.labels[v]]) for u, v in H.edges()]
    return build_graph(len(order), edges, order)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; labels become ``"i:label"`` for the ``i``-th operand."""
    adj: list[int] = []
    labels: list[str] = []
    offset = 0
    for i, G in enumerate(graphs):
        adj.extend(a << offset for a in G.adj)
        labels.extend(f"{i}:{x}" for x in G.vertex_labels())
        offset += G.n
    return Graph(offset, adj, labels)


def join(G: Graph, H: Graph) -> Graph:
    """``G + H``: disjoint union plus every edge between the two sides."""
    U = disjoint_union(G, H)
    left = (1 << G.n) - 1
    right = ((1 << H.n) - 1) << G.n
    adj = [a | (right if v < G.n else left) for v, a in enumerate(U.adj)]
    return Graph(U.n, adj, U.labels)


def remove_isolated(G: Graph) -> Graph:
    return G.induced(v for v in range(G.n) if G.adj[v])


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------


class DistanceMatrix:
    """All-pairs shortest-path lengths; unreachable pairs hold :data:`INF`."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[float]]):
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, uv: tuple[int, int]):
        u, v = uv
        return self.rows[u][v]

    def row(self, u: int) -> tuple:
        return self.rows[u]

    def eccentricity(self, v: int):
        return max(self.rows[v], default=0)

    def diameter(self):
        return max((max(r) for r in self.rows), default=0)

    def as_array(self) -> np.ndarray:
        """Float array copy (``inf`` for unreachable pairs)."""
        return np.array(self.rows, dtype=float).reshape(self.n, self.n)


def bfs_layers(adj: Sequence[int], source: int) -> list[int]:
    """Distance layers from ``source`` as bitmasks: ``layers[k]`` = vertices at distance k."""
    layers = [1 << source]
    seen = 1 << source
    frontier = seen
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    rows = []
    for s in range(G.n):
        row: list[float] = [INF] * G.n
        for d, layer in enumerate(bfs_layers(G.adj, s)):
            for v in iter_bits(layer):
                row[v] = d
        rows.append(row)
    return DistanceMatrix(rows)


def diameter(G: Graph):
    """Diameter; :data:`INF` for disconnected graphs, 0 for order <= 1."""
    return G.distances.diameter()


# ---------------------------------------------------------------------------
# Vertex classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexClasses:
    simplicial: frozenset[int]
    true_twin_classes: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    leaves: frozenset[int]


def is_simplicial(G: Graph, v: int) -> bool:
    nb = G.adj[v]
    return all(nb & ~(1 << u) & ~G.adj[u] == 0 for u in iter_bits(nb))


def simplicial_vertices(G: Graph) -> frozenset[int]:
    return frozenset(v for v in range(G.n) if is_simplicial(G, v))


def true_twins(G: Graph, u: int, v: int) -> bool:
    return u != v and G.closed_mask(u) == G.closed_mask(v)


def false_twins(G: Graph, u: int, v: int) -> bool:
    return u != v and G.adj[u] == G.adj[v]


def true_twin_classes(G: Graph) -> tuple[frozenset[int], ...]:
    """Partition of V(G) by closed neighbourhood, ordered by smallest member."""
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(G.closed_mask(v), []).append(v)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def is_true_twin_free(G: Graph) -> bool:
    return len({G.closed_mask(v) for v in range(G.n)}) == G.n


def is_false_twin_free(G: Graph) -> bool:
    return len({G.adj[v] for v in range(G.n)}) == G.n


def cut_vertices(G: Graph) -> frozenset[int]:
    """Vertices whose removal increases the number of components."""
    base = len(G.component_masks())
    cuts = set()
    for v in range(G.n):
        if G.degree(v) < 2:
            continue
        rest = G.all_mask & ~(1 << v)
        count = 0
        left = rest
        while left:
            comp = _reach(G.adj, left & -left, rest)
            left &= ~comp
            count += 1
        if count > base:
            cuts.add(v)
    return frozenset(cuts)


def classify_vertices(G: Graph) -> VertexClasses:
    return VertexClasses(
        simplicial=simplicial_vertices(G),
        true_twin_classes=true_twin_classes(G),
        cut_vertices=cut_vertices(G),
        leaves=frozenset(v for v in range(G.n) if G.degree(v) == 1),
    )


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------


def bipartition(G: Graph) -> tuple[int, int] | None:
    """Colour classes as bitmasks, or ``None`` when ``G`` has an odd cycle."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    left = mask_of(v for v in range(G.n) if side[v] == 0)
    return left, G.all_mask & ~left


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def triangle_count(G: Graph) -> int:
    total = 0
    for u, v in G.edges():
        total += (G.adj[u] & G.adj[v]).bit_count()
    return total // 3


def vertices_in_triangles(G: Graph) -> frozenset[int]:
    out = set()
    for u, v in G.edges():
        common = G.adj[u] & G.adj[v]
        if common:
            out.update((u, v))
            out.update(iter_bits(common))
    return frozenset(out)


def is_triangle_free(G: Graph) -> bool:
    return all(G.adj[u] & G.adj[v] == 0 for u, v in G.edges())


def is_complete(G: Graph) -> bool:
    return all(G.degree(v) == G.n - 1 for v in range(G.n))


def is_two_antipodal(G: Graph) -> bool:
    """Every vertex has exactly one vertex at distance ``D(G)``."""
    if G.n == 0:
        return False
    dm = G.distances
    D = dm.diameter()
    return all(sum(1 for d in dm.row(x) if d == D) == 1 for x in range(G.n))


def five_cycles(G: Graph) -> list[tuple[int, ...]]:
    """All 5-cycles, each reported once starting at its smallest vertex."""
    found = []
    for s in range(G.n):
        higher = G.all_mask & ~((1 << (s + 1)) - 1)

        def extend(path: list[int], used: int) -> None:
            last = path[-1]
            if len(path) == 5:
                if G.adj[last] >> s & 1 and path[1] < path[4]:
                    found.append(tuple(path))
                return
            for u in iter_bits(G.adj[last] & higher & ~used):
                path.append(u)
                extend(path, used | (1 << u))
                path.pop()

        extend([s], 1 << s)
    return found


def is_c5_connected(G: Graph) -> bool:
    """Every pair of distinct vertices lies on a common 5-cycle."""
    if G.n < 2:
        return False
    covered = [0] * G.n
    for cyc in five_cycles(G):
        m = mask_of(cyc)
        for v in cyc:
            covered[v] |= m
    return all(covered[v] | (1 << v) == G.all_mask for v in range(G.n))


def is_hamiltonian(G: Graph) -> bool:
    """Exact Hamiltonian-cycle test by subset dynamic programming (order <= 12)."""
    n = G.n
    if n > HAMILTONIAN_MAX_ORDER:
        raise OrderTooLarge(f"hamiltonicity check limited to order {HAMILTONIAN_MAX_ORDER}")
    if n < 3:
        return False
    # ends[S]: vertices v such that some path from 0 visits exactly S and stops at v
    ends = [0] * (1 << n)
    ends[1] = 1
    for S in range(1, 1 << n, 2):
        e = ends[S]
        if not e:
            continue
        for v in iter_bits(e):
            for u in iter_bits(G.adj[v] & ~S):
                ends[S | (1 << u)] |= 1 << u
    return bool(ends[(1 << n) - 1] & G.adj[0])


def maximum_bipartite_matching(G: Graph, left: int) -> dict[int, int]:
    """Hopcroft-Karp on the bipartite graph whose left side is the mask ``left``.

    Returns the matching as a symmetric dict ``vertex -> partner``.
    """
    L = list(iter_bits(left))
    mate: dict[int, int] = {}
    while True:
        # BFS from free left vertices builds the layered graph
        dist: dict[int, float] = {}
        queue = []
        for u in L:
            if u not in mate:
                dist[u] = 0
                queue.append(u)
        found = False
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in iter_bits(G.adj[u]):
                m = mate.get(w)
                if m is None:
                    found = True
                elif m not in dist:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        if not found:
            return mate

        def augment(u: int) -> bool:
            for w in iter_bits(G.adj[u]):
                m = mate.get(w)
                if m is None or (dist.get(m) == dist[u] + 1 and augment(m)):
                    mate[u] = w
                    mate[w] = u
                    return True
            dist[u] = INF
            return False

        progressed = False
        for u in L:
            if u not in mate and augment(u):
                progressed = True
        if not progressed:
            return mate


def has_bipartite_perfect_matching(G: Graph) -> bool:
    if G.n > MATCHING_MAX_ORDER:
        raise OrderTooLarge(f"matching check limited to order {MATCHING_MAX_ORDER}")
    parts = bipartition(G)
    if parts is None:
        raise NotBipartite("perfect-matching check expects a bipartite graph")
    if G.n % 2:
        return False
    mate = maximum_bipartite_matching(G, parts[0])
    return len(mate) == G.n


def has_perfect_matching(G: Graph) -> bool:
    """Perfect matching in an arbitrary small graph, by backtracking."""
    if G.n > GENERAL_MATCHING_MAX_ORDER:
        raise OrderTooLarge(f"general matching limited to order {GENERAL_MATCHING_MAX_ORDER}")
    if G.n % 2:
        return False

    def solve(free: int) -> bool:
        if not free:
            return True
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        return any(solve(rest & ~(1 << u)) for u in iter_bits(G.adj[v] & rest))

    return solve(G.all_mask)


@dataclass(frozen=True)
class Structure:
    connected: bool
    bipartite: bool
    triangle_free: bool
    is_2_antipodal: bool
    is_c5_connected: bool
    has_bipartite_perfect_matching: bool | None
    is_hamiltonian: bool | None


def structure_predicates(G: Graph) -> Structure:
    """Boolean summary; checks that do not apply (non-bipartite, too large) read ``None``."""
    bip = is_bipartite(G)
    return Structure(
        connected=G.is_connected(),
        bipartite=bip,
        triangle_free=is_triangle_free(G),
        is_2_antipodal=is_two_antipodal(G),
        is_c5_connected=is_c5_connected(G),
        has_bipartite_perfect_matching=has_bipartite_perfect_matching(G) if bip else None,
        is_hamiltonian=is_hamiltonian(G) if G.n <= HAMILTONIAN_MAX_ORDER else None,
    )


def is_path_graph(G: Graph) -> bool:
    """``G`` is isomorphic to ``P_n`` for some ``n >= 1``."""
    return G.n >= 1 and G.is_connected() and G.edge_count == G.n - 1 and max(G.degrees()) <= 2


def complete_bipartite_parts(G: Graph) -> tuple[int, int] | None:
    """Part sizes ``(r, s)``, ``r <= s``, if ``G`` is ``K_{r,s}`` with ``r, s >= 1``."""
    parts = bipartition(G)
    if parts is None or not G.is_connected() or G.n < 2:
        return None
    a, b = parts
    r, s = a.bit_count(), b.bit_count()
    if G.edge_count != r * s:
        return None
    return (min(r, s), max(r, s))


def pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
