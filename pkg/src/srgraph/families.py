"""Named graph families, small fixtures, and exhaustive enumeration.

Graph spec strings are short strings understood by :func:`parse_spec`::

    P5  C5  K4  N3  S3  K2,3  K2,2,3  Q3  petersen
    Ham(2,3)  F(4)  FP(9)  Cstar(5)  pruefer(0,1,1)
    join(P4)  join(K1,union(K1,K2))  union(K2,K2)  compl(C7)
    fig:fig5  g6:Dhc

``S<n>`` is the star ``K_{1,n}``; ``join`` with a single argument puts a new
apex over the graph.  Inside an argument list a complete multipartite graph
may also be written ``K(2,3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Sequence, Union

from .errors import InvalidParameter, MalformedInput, OrderTooLarge
from .graph import Graph, _reach, build_graph, complement, graph_from_labeled_edges, join
from .products import hamming

ENUMERATION_MAX_ORDER = 7
CLASSES_MAX_ORDER = 8


# ---------------------------------------------------------------------------
# Spec records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Empty:
    n: int


@dataclass(frozen=True)
class Star:
    leaves: int


@dataclass(frozen=True)
class CompleteBipartite:
    r: int
    t: int


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Hypercube:
    k: int


@dataclass(frozen=True)
class Hamming:
    k: int
    q: int


@dataclass(frozen=True)
class Petersen:
    pass


@dataclass(frozen=True)
class TreeFromPruefer:
    seq: tuple[int, ...]


@dataclass(frozen=True)
class FamilyF:
    r: int


@dataclass(frozen=True)
class FamilyFP:
    n: int


@dataclass(frozen=True)
class CycleStar:
    n: int


@dataclass(frozen=True)
class JoinK1:
    base: Graph


FamilySpec = Union[
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    CompleteBipartite,
    CompleteMultipartite,
    Hypercube,
    Hamming,
    Petersen,
    TreeFromPruefer,
    FamilyF,
    FamilyFP,
    CycleStar,
    JoinK1,
]


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


def _indexed(n: int, edges: list[tuple[int, int]]) -> Graph:
    return build_graph(n, edges, [str(i) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return _indexed(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return _indexed(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return _indexed(n, list(combinations(range(n), 2)))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return _indexed(n, [])


def star(leaves: int) -> Graph:
    _need(leaves >= 1, "star needs at least one leaf")
    return _indexed(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), "parts must be positive")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return _indexed(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return _indexed(10, outer + inner + spokes)


def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    _need(all(0 <= x < n for x in seq), f"Pruefer entries must lie in 0..{n - 1}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return _indexed(n, edges)


def family_f(r: int) -> Graph:
    """Member ``G_r`` of the family whose SR graph is a star plus ``K_{r,r}`` minus a matching."""
    _need(r >= 2, "family F needs r >= 2")
    edges = []
    for i in range(r + 1):
        edges += [(f"a{i}", f"b{i}"), (f"b{i}", f"c{i}")]
    for i in range(1, r + 1):
        edges += [(f"a{i}", "a0"), (f"b{i}", "b0"), (f"c{i}", "c0")]
    edges += [("x", "a0"), ("x", "c0")]
    order = [f"{p}{i}" for p in "abc" for i in range(r + 1)] + ["x"]
    return graph_from_labeled_edges(edges, order)


def family_fp(n: int) -> Graph:
    """Member ``G_P^n`` whose strong resolving graph is the path ``P_n``."""
    _need(n >= 5, "family FP needs n >= 5")
    v = [f"v{i}" for i in range(1, n)]
    edges = [(v[i], v[i + 1]) for i in range(n - 2)]

    def V(i: int) -> str:
        return f"v{i}"

    if n % 2 == 0:
        h = (n - 2) // 2
        a = [f"a{i}" for i in range(1, h + 1)]
        b = [f"b{i}" for i in range(1, h + 1)]
        for i in range(1, h + 1):
            edges += [(f"a{i}", V(2 * i - 1)), (f"a{i}", V(2 * i + 1))]
        for i in range(1, (n - 4) // 2 + 1):
            edges += [(f"b{i}", V(2 * i)), (f"b{i}", V(2 * i + 2))]
        edges += [(f"b{h}", V(n - 2)), (f"b{h}", V(n - 1))]
    else:
        h = (n - 1) // 2
        a = [f"a{i}" for i in range(1, h + 1)]
        b = [f"b{i}" for i in range(1, (n - 3) // 2 + 1)]
        for i in range(1, (n - 3) // 2 + 1):
            edges += [(f"a{i}", V(2 * i - 1)), (f"a{i}", V(2 * i + 1))]
        edges += [(f"a{h}", V(n - 2)), (f"a{h}", V(n - 1))]
        for i in range(1, (n - 3) // 2 + 1):
            edges += [(f"b{i}", V(2 * i)), (f"b{i}", V(2 * i + 2))]
    return graph_from_labeled_edges(edges, v + a + b)


def cycle_star(n: int) -> Graph:
    """``C_n^*`` for odd ``n``: ``v_{ik}`` joined to ``v_{(i+1)k}`` with ``k = floor(n/2)``."""
    _need(n >= 5 and n % 2 == 1, "cycle star needs odd n >= 5")
    k = n // 2
    labels = [f"v{i}" for i in range(n)]
    edges = [((i * k) % n, ((i + 1) * k) % n) for i in range(n)]
    return build_graph(n, edges, labels)


def join_k1(G: Graph) -> Graph:
    """``K_1 + G``; the apex is labelled ``apex`` and listed first."""
    labels = G.vertex_labels()
    apex = "apex"
    while apex in labels:
        apex += "'"
    J = join(build_graph(1, []), G)
    return J.with_labels([apex, *labels])


def union(*graphs: Graph) -> Graph:
    """Disjoint union with plain index labels."""
    from .graph import disjoint_union

    U = disjoint_union(*graphs)
    return U.with_labels([str(i) for i in range(U.n)])


def make(spec: FamilySpec) -> Graph:
    if isinstance(spec, Path):
        return path(spec.n)
    if isinstance(spec, Cycle):
        return cycle(spec.n)
    if isinstance(spec, Complete):
        return complete(spec.n)
    if isinstance(spec, Empty):
        return empty(spec.n)
    if isinstance(spec, Star):
        return star(spec.leaves)
    if isinstance(spec, CompleteBipartite):
        return complete_multipartite((spec.r, spec.t))
    if isinstance(spec, CompleteMultipartite):
        return complete_multipartite(spec.parts)
    if isinstance(spec, Hypercube):
        _need(spec.k >= 1, "hypercube needs k >= 1")
        return hamming(spec.k, 2)
    if isinstance(spec, Hamming):
        _need(spec.k >= 1 and spec.q >= 1, "Hamming graph needs k, q >= 1")
        return hamming(spec.k, spec.q)
    if isinstance(spec, Petersen):
        return petersen()
    if isinstance(spec, TreeFromPruefer):
        return tree_from_pruefer(spec.seq)
    if isinstance(spec, FamilyF):
        return family_f(spec.r)
    if isinstance(spec, FamilyFP):
        return family_fp(spec.n)
    if isinstance(spec, CycleStar):
        return cycle_star(spec.n)
    if isinstance(spec, JoinK1):
        return join_k1(spec.base)
    raise InvalidParameter(f"unknown family spec {spec!r}")


# ---------------------------------------------------------------------------
# Figure fixtures
# ---------------------------------------------------------------------------


def _fig(edges: str, order: str | None = None) -> Graph:
    pairs = [tuple(e.split("-")) for e in edges.split()]
    return graph_from_labeled_edges(pairs, order.split() if order else None)  # type: ignore[arg-type]


def _lex_p4_p3() -> Graph:
    from .products import ProductKind, product

    return product(ProductKind.LEXICOGRAPHIC, path(4), path(3))


def _fig10() -> Graph:
    from .products import ProductKind, product

    g = cycle(5).with_labels([f"g{i}" for i in range(1, 6)])
    h = cycle(5).with_labels([f"h{i}" for i in range(1, 6)])
    return product(ProductKind.DIRECT, g, h)


FIGURES: dict[str, Callable[[], Graph]] = {
    # twins d,e,f; b,g twins that are not simplicial
    "fig1": lambda: _fig("a-g g-c c-b b-a c-f f-e e-d d-c g-b f-d c-e", "a b c d e f g"),
    # three blocks strung along cut vertices c and e
    "fig2": lambda: _fig(
        "a-j j-c c-b b-a j-b c-i i-e e-d d-c e-h h-g g-f f-e h-f e-g", "a b c d e f g h i j"
    ),
    "fig4": lambda: family_f(4),
    "fig5": lambda: _fig("a-b b-e e-f f-g g-a g-h b-c b-d", "a b c d e f g h"),
    # theta graph whose two marked vertices share no five-cycle
    "fig6g": lambda: _fig("u-w w-z w-v z-x x-y y-u y-v", "u v w x y z"),
    "fig6h": lambda: _fig("a-b g-h c-b c-f b-g a-h a-d c-d d-e f-e g-e f-h", "a b c d e f g h"),
    "fig7": lambda: _fig_product("cartesian", complete(3), complete(3)),
    "fig9a": lambda: family_fp(9),
    "fig9b": lambda: family_fp(10),
    "fig10": _fig10,
    "fig11": _lex_p4_p3,
    # path a..g with the chord c-e
    "fig12": lambda: _fig("a-b b-c c-d d-e e-f f-g c-e", "a b c d e f g"),
    "fig13": lambda: join_k1(union(complete(1), complete(2))),
}


def _fig_product(kind: str, G: Graph, H: Graph) -> Graph:
    from .products import product

    return product(kind, G, H)


def figure(name: str) -> Graph:
    try:
        return FIGURES[name]()
    except KeyError:
        raise InvalidParameter(f"unknown figure {name!r}; known: {sorted(FIGURES)}") from None


# ---------------------------------------------------------------------------
# Spec strings
# ---------------------------------------------------------------------------

_ATOM = re.compile(
    r"""(?P<g6>g6:[?-~]+)
      | (?P<fig>fig:[A-Za-z0-9_]+)
      | (?P<multi>K\d+(?:,\d+)+)
      | (?P<simple>[PCKNQS])(?P<num>\d+)
      | (?P<word>petersen)""",
    re.VERBOSE,
)
_FUNC = re.compile(r"(?P<name>[A-Za-z]+)\(")


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def fail(self, msg: str) -> MalformedInput:
        return MalformedInput(f"{msg} at position {self.pos} in {self.text!r}")

    def expect(self, ch: str) -> None:
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise self.fail(f"expected {ch!r}")
        self.pos += 1

    def integers(self) -> list[int]:
        out = []
        while True:
            m = re.compile(r"-?\d+").match(self.text, self.pos)
            if not m:
                raise self.fail("expected an integer")
            out.append(int(m.group()))
            self.pos = m.end()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                continue
            return out

    def graphs(self) -> list[Graph]:
        out = [self.graph()]
        while self.text.startswith(",", self.pos):
            self.pos += 1
            out.append(self.graph())
        return out

    def graph(self) -> Graph:
        m = _FUNC.match(self.text, self.pos)
        if m:
            name = m.group("name").lower()
            self.pos = m.end()
            if self.text.startswith(")", self.pos):
                raise self.fail("empty argument list")
            if name in ("join", "union", "compl"):
                args = self.graphs()
                self.expect(")")
                if name == "compl":
                    if len(args) != 1:
                        raise self.fail("compl takes one graph")
                    return complement(args[0])
                if name == "union":
                    return union(*args)
                if len(args) == 1:
                    return join_k1(args[0])
                J = args[0]
                for X in args[1:]:
                    J = join(J, X)
                return J.with_labels([str(i) for i in range(J.n)])
            nums = self.integers()
            self.expect(")")
            return _numeric(name, nums, self)
        m = _ATOM.match(self.text, self.pos)
        if not m:
            raise self.fail("unrecognised graph")
        self.pos = m.end()
        if m.group("g6"):
            from .io import parse_graph6

            return parse_graph6(m.group("g6")[3:])
        if m.group("fig"):
            return figure(m.group("fig")[4:])
        if m.group("multi"):
            return complete_multipartite([int(x) for x in m.group("multi")[1:].split(",")])
        if m.group("word"):
            return petersen()
        kind, n = m.group("simple"), int(m.group("num"))
        return {
            "P": path,
            "C": cycle,
            "K": complete,
            "N": empty,
            "Q": lambda k: make(Hypercube(k)),
            "S": star,
        }[kind](n)


def _numeric(name: str, nums: list[int], p: _Parser) -> Graph:
    def arity(k: int) -> None:
        if len(nums) != k:
            raise p.fail(f"{name} takes {k} integer(s)")

    if name == "ham":
        arity(2)
        return make(Hamming(nums[0], nums[1]))
    if name == "f":
        arity(1)
        return family_f(nums[0])
    if name == "fp":
        arity(1)
        return family_fp(nums[0])
    if name == "cstar":
        arity(1)
        return cycle_star(nums[0])
    if name == "pruefer":
        return tree_from_pruefer(nums)
    if name == "k":
        return complete_multipartite(nums)
    raise p.fail(f"unknown constructor {name!r}")


def parse_spec(text: str) -> Graph:
    """Build the graph described by a spec string (see the module docstring)."""
    p = _Parser(text)
    if not p.text:
        raise MalformedInput("empty graph spec")
    G = p.graph()
    if p.pos != len(p.text):
        raise p.fail("trailing characters")
    return G


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Order of the edge bits used by :func:`enumerate_graphs` (column-major upper triangle)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    for k, (i, j) in enumerate(edge_slots(n)):
        if mask >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, adj)


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    dedup: bool = False,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[Graph]:
    """Stream every labeled graph on ``n`` vertices whose edge mask lies in ``[start, stop)``.

    Bit ``k`` of the mask is the ``k``-th pair of :func:`edge_slots`.  With
    ``dedup`` only the first graph of each isomorphism class is yielded.
    """
    if n > ENUMERATION_MAX_ORDER:
        raise OrderTooLarge(f"labeled enumeration limited to order {ENUMERATION_MAX_ORDER}")
    if n < 0:
        raise InvalidParameter("negative order")
    slots = edge_slots(n)
    total = 1 << len(slots)
    stop = total if stop is None else min(stop, total)
    bits = [((1 << j), (1 << i)) for i, j in slots]
    full = (1 << n) - 1
    seen: set = set()
    if dedup:
        from .iso import canonical_form
    for mask in range(start, stop):
        adj = [0] * n
        m = mask
        k = 0
        while m:
            if m & 1:
                i, j = slots[k]
                bj, bi = bits[k]
                adj[i] |= bj
                adj[j] |= bi
            m >>= 1
            k += 1
        if connected_only and n and _reach(adj, 1) != full:
            continue
        G = Graph(n, adj)
        if dedup:
            key = canonical_form(G).code
            if key in seen:
                continue
            seen.add(key)
        yield G


@lru_cache(maxsize=None)
def graph_classes(n: int, connected: bool = True) -> tuple[Graph, ...]:
    """One representative per isomorphism class of order ``n``, in canonical form.

    Built by vertex augmentation: every connected graph has a vertex whose
    removal leaves it connected, so the connected classes of order ``n`` all
    arise from those of order ``n - 1`` plus a vertex with a nonempty
    neighbourhood.  Representatives are sorted by (edge count, canonical code).
    """
    from .iso import canonical_form

    if n > CLASSES_MAX_ORDER:
        raise OrderTooLarge(f"class generation limited to order {CLASSES_MAX_ORDER}")
    if n < 1:
        return (Graph(0, []),) if n == 0 else ()
    if n == 1:
        return (Graph(1, [0]),)
    found: dict[bytes, Graph] = {}
    lowest = 1 if connected else 0
    for base in graph_classes(n - 1, connected):
        for nb in range(lowest, 1 << (n - 1)):
            adj = list(base.adj) + [nb]
            for u in range(n - 1):
                if nb >> u & 1:
                    adj[u] |= 1 << (n - 1)
            cf = canonical_form(Graph(n, adj))
            if cf.code not in found:
                found[cf.code] = cf.graph
    return tuple(found[k] for k in sorted(found, key=lambda c: (found[c].edge_count, c)))
