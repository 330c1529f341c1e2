"""Strong metric generators and the strong metric dimension.

Two routes are kept strictly apart:

* :func:`dims_oracle` scans vertex subsets by increasing size and tests the
  definition of a strong metric generator directly on the distance matrix;
* :func:`dims_via_srg` takes a minimum vertex cover of the strong resolving
  graph.

The cover search and the independent-set search are exact branch and bound
procedures over bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Literal

from .errors import OrderTooLarge
from .graph import Graph, iter_bits, mask_of
from .srg import srg, srg_vertices

ORACLE_MAX_ORDER = 14
COVER_MAX_ORDER = 64
BRUTE_FORCE_MAX_ORDER = 20


@dataclass(frozen=True)
class CoverResult:
    size: int
    witness: frozenset[int]
    method: Literal["brute_force", "branch_and_bound"]


@dataclass(frozen=True)
class DimsResult:
    dimension: int
    basis: frozenset[int]
    route: Literal["oracle", "via_srg"]

    def basis_labels(self, G: Graph) -> list[str]:
        return G.names(self.basis)


# ---------------------------------------------------------------------------
# Definitional route
# ---------------------------------------------------------------------------


def strongly_resolves(G: Graph, w: int, u: int, v: int) -> bool:
    """``w`` lies at the far end of a shortest path through ``u`` to ``v`` (or vice versa)."""
    G.require_connected()
    dm = G.distances
    return dm[w, u] == dm[w, v] + dm[v, u] or dm[w, v] == dm[w, u] + dm[u, v]


def resolver_masks(G: Graph) -> list[int]:
    """For each pair ``u < v`` (lexicographic order) the bitmask of vertices resolving it."""
    G.require_connected()
    dm = G.distances
    rows = dm.rows
    out = []
    for u, v in combinations(range(G.n), 2):
        duv = rows[u][v]
        m = 0
        for w in range(G.n):
            dwu = rows[w][u]
            dwv = rows[w][v]
            if dwu == dwv + duv or dwv == dwu + duv:
                m |= 1 << w
        out.append(m)
    return out


def is_strong_generator(G: Graph, S: Iterable[int]) -> bool:
    s = mask_of(S)
    return all(m & s for m in resolver_masks(G))


def _generators_of_size(masks: list[int], n: int, k: int) -> Iterator[tuple[int, ...]]:
    for combo in combinations(range(n), k):
        s = mask_of(combo)
        if all(m & s for m in masks):
            yield combo


def dims_oracle(G: Graph) -> DimsResult:
    """Smallest strong metric generator by exhaustive search (lexicographically least)."""
    if G.n > ORACLE_MAX_ORDER:
        raise OrderTooLarge(f"subset oracle limited to order {ORACLE_MAX_ORDER}")
    masks = resolver_masks(G)
    for k in range(G.n + 1):
        for combo in _generators_of_size(masks, G.n, k):
            return DimsResult(k, frozenset(combo), "oracle")
    raise AssertionError("V(G) is always a strong metric generator")


def strong_bases(G: Graph) -> list[frozenset[int]]:
    """Every strong metric basis (all minimum generators), by the subset oracle."""
    if G.n > ORACLE_MAX_ORDER:
        raise OrderTooLarge(f"subset oracle limited to order {ORACLE_MAX_ORDER}")
    masks = resolver_masks(G)
    for k in range(G.n + 1):
        found = [frozenset(c) for c in _generators_of_size(masks, G.n, k)]
        if found:
            return found
    raise AssertionError("V(G) is always a strong metric generator")


# ---------------------------------------------------------------------------
# Vertex cover by branch and bound
# ---------------------------------------------------------------------------


def _greedy_matching_bound(adj: list[int], alive: int) -> int:
    # size of a maximal matching: a lower bound on any vertex cover
    count = 0
    free = alive
    for v in iter_bits(alive):
        if not free >> v & 1:
            continue
        nb = adj[v] & free & ~(1 << v)
        if nb:
            u = (nb & -nb).bit_length() - 1
            free &= ~((1 << v) | (1 << u))
            count += 1
    return count


def _min_cover(adj: list[int], alive: int, budget: int) -> int | None:
    """A minimum vertex cover of the subgraph induced by ``alive`` if its size <= ``budget``.

    Returns the cover as a bitmask, or ``None`` when every cover exceeds the budget.
    """
    taken = 0
    # kernel: isolated vertices leave, a pendant vertex's neighbour is taken
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            nb = adj[v] & alive
            if not nb:
                alive &= ~(1 << v)
                changed = True
            elif nb & (nb - 1) == 0:
                taken |= nb
                alive &= ~nb & ~(1 << v)
                budget -= 1
                changed = True
                if budget < 0:
                    return None
                break
    if not alive:
        return taken
    if _greedy_matching_bound(adj, alive) > budget:
        return None
    best_v, best_d = -1, -1
    for v in iter_bits(alive):
        d = (adj[v] & alive).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    v = best_v
    nb = adj[v] & alive
    # branch 1: take v
    a = _min_cover(adj, alive & ~(1 << v), budget - 1) if budget >= 1 else None
    if a is not None:
        a |= 1 << v
        budget = a.bit_count() - 1
    # branch 2: take every neighbour of v; only useful if strictly smaller
    b = None
    k = nb.bit_count()
    if k <= budget:
        b = _min_cover(adj, alive & ~nb & ~(1 << v), budget - k)
        if b is not None:
            b |= nb
    best = b if b is not None else a
    if best is None:
        return None
    return taken | best


def _cover_size(adj: list[int], alive: int, budget: int) -> int | None:
    c = _min_cover(adj, alive, budget)
    return None if c is None else c.bit_count()


def _lex_least_cover(adj: list[int], n: int, size: int) -> int:
    """Lexicographically least (by sorted vertex indices) cover of the given minimum size."""
    alive = (1 << n) - 1
    chosen = 0
    for v in range(n):
        if not alive >> v & 1:
            continue
        if not adj[v] & alive:
            alive &= ~(1 << v)
            continue
        # try putting v in the cover
        rest = alive & ~(1 << v)
        budget = size - chosen.bit_count() - 1
        if budget >= 0 and _min_cover(adj, rest, budget) is not None:
            chosen |= 1 << v
            alive = rest
        else:
            nb = adj[v] & alive
            chosen |= nb
            alive &= ~nb & ~(1 << v)
    if chosen.bit_count() != size:
        raise AssertionError("lexicographic reconstruction lost optimality")
    return chosen


def _brute_force_cover(G: Graph) -> CoverResult:
    edges = G.edges()
    for k in range(G.n + 1):
        for combo in combinations(range(G.n), k):
            s = mask_of(combo)
            if all(s >> u & 1 or s >> v & 1 for u, v in edges):
                return CoverResult(k, frozenset(combo), "brute_force")
    raise AssertionError("V(G) covers every edge")


def vertex_cover_number(
    G: Graph, method: Literal["branch_and_bound", "brute_force"] = "branch_and_bound"
) -> CoverResult:
    """Exact minimum vertex cover with the lexicographically least optimal witness."""
    if method == "brute_force":
        if G.n > BRUTE_FORCE_MAX_ORDER:
            raise OrderTooLarge(f"brute force limited to order {BRUTE_FORCE_MAX_ORDER}")
        return _brute_force_cover(G)
    if G.n > COVER_MAX_ORDER:
        raise OrderTooLarge(f"cover search limited to order {COVER_MAX_ORDER}")
    adj = list(G.adj)
    full = G.all_mask
    cover = _min_cover(adj, full, G.n)
    assert cover is not None
    size = cover.bit_count()
    witness = _lex_least_cover(adj, G.n, size)
    return CoverResult(size, frozenset(iter_bits(witness)), "branch_and_bound")


def is_vertex_cover(G: Graph, S: Iterable[int]) -> bool:
    s = mask_of(S)
    return all(s >> u & 1 or s >> v & 1 for u, v in G.edges())


# ---------------------------------------------------------------------------
# Independence number as a clique search in the complement
# ---------------------------------------------------------------------------


def _max_clique(nbr: list[int], cand: int, size: int, best: list[int]) -> None:
    if not cand:
        if size > best[0]:
            best[0] = size
        return
    # greedy colouring of the candidates gives an upper bound per vertex
    order: list[int] = []
    bounds: list[int] = []
    uncoloured = cand
    colour = 0
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~nbr[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    for i in range(len(order) - 1, -1, -1):
        if size + bounds[i] <= best[0]:
            return
        v = order[i]
        _max_clique(nbr, cand & nbr[v], size + 1, best)
        cand &= ~(1 << v)


def independence_number(G: Graph) -> int:
    """Largest independent set size, as the clique number of the complement."""
    if G.n > COVER_MAX_ORDER:
        raise OrderTooLarge(f"independence search limited to order {COVER_MAX_ORDER}")
    full = G.all_mask
    comp = [full & ~G.adj[v] & ~(1 << v) for v in range(G.n)]
    best = [0]
    _max_clique(comp, full, 0, best)
    return best[0]


# ---------------------------------------------------------------------------
# Reduction route
# ---------------------------------------------------------------------------


def dims_via_srg(G: Graph) -> DimsResult:
    """Strong metric dimension as the vertex cover number of the strong resolving graph."""
    R = srg(G)
    where = srg_vertices(G)
    cover = vertex_cover_number(R)
    basis = frozenset(where[i] for i in cover.witness)
    if not is_strong_generator(G, basis):
        raise AssertionError("lifted cover is not a strong metric generator")
    return DimsResult(cover.size, basis, "via_srg")


def dims(G: Graph) -> int:
    return dims_via_srg(G).dimension
