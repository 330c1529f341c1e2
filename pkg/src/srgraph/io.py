"""graph6 and edge-list text formats."""

from __future__ import annotations

from .errors import IndexOutOfRange, MalformedInput, UnsupportedLongForm
from .graph import Graph, build_graph, graph_from_labeled_edges

GRAPH6_MAX_ORDER = 62


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def emit_graph6(G: Graph) -> str:
    """Short-form graph6: order byte, then the upper triangle column by column in 6-bit groups."""
    n = G.n
    if n > GRAPH6_MAX_ORDER:
        raise UnsupportedLongForm(f"graph6 long form (order {n} > {GRAPH6_MAX_ORDER}) not supported")
    bits = [1 if G.adj[i] >> j & 1 else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise MalformedInput("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedInput(f"graph6 characters must lie in '?'..'~': {s!r}")
    if s[0] == "~":
        raise UnsupportedLongForm("graph6 long form (order > 62) not supported")
    n = ord(s[0]) - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise MalformedInput(f"graph6 order {n} needs {need} data bytes, got {len(body)}")
    bits = []
    for c in body:
        v = ord(c) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise MalformedInput("nonzero padding bits in graph6 string")
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# Edge lists
# ---------------------------------------------------------------------------


def emit_edge_list(G: Graph) -> str:
    """``n <count>``, a ``labels`` line when labels are present, then one edge per line.

    Edges are sorted by (smaller, larger) endpoint index and written with
    labels whenever a ``labels`` line is present.
    """
    lines = [f"n {G.n}"]
    if G.labels is not None and any(any(ch.isspace() for ch in x) for x in G.labels):
        raise MalformedInput("labels containing whitespace cannot be written")
    if G.labels is not None and list(G.labels) != [str(i) for i in range(G.n)]:
        lines.append("labels " + " ".join(G.labels))
        lines.extend(f"{G.labels[u]} {G.labels[v]}" for u, v in G.edges())
    else:
        lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with optional ``n <count>`` / ``labels ...`` headers and ``#`` comments.

    Endpoints are vertex indices, or, when any endpoint is not an integer,
    vertex labels (listed in order of first appearance unless a ``labels``
    header fixes the order).
    """
    n = None
    labels: list[str] | None = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "n":
            if len(tok) != 2 or not tok[1].isdigit() or n is not None:
                raise MalformedInput(f"line {lineno}: bad order header {raw!r}")
            n = int(tok[1])
        elif tok[0] == "labels":
            if labels is not None:
                raise MalformedInput(f"line {lineno}: repeated labels header")
            labels = tok[1:]
        elif len(tok) == 2:
            pairs.append((tok[0], tok[1]))
        else:
            raise MalformedInput(f"line {lineno}: expected 'u v', got {raw!r}")
    if labels is not None:
        if n is not None and len(labels) != n:
            raise MalformedInput(f"labels header lists {len(labels)} names for order {n}")
        if len(set(labels)) != len(labels):
            raise MalformedInput("duplicate vertex labels")
        where = {x: i for i, x in enumerate(labels)}

        def resolve(tok: str) -> int:
            if tok in where:
                return where[tok]
            if tok.isdigit():
                return int(tok)
            raise MalformedInput(f"unknown vertex {tok!r}")

        idx = [(resolve(a), resolve(b)) for a, b in pairs]
        return _build(len(labels), idx, labels)
    if all(a.isdigit() and b.isdigit() for a, b in pairs):
        idx = [(int(a), int(b)) for a, b in pairs]
        if n is None:
            n = max((max(e) for e in idx), default=-1) + 1
        return _build(n, idx, None)
    G = graph_from_labeled_edges(pairs)
    if n is not None and G.n != n:
        if G.n > n:
            raise MalformedInput(f"{G.n} vertices named but order header says {n}")
        # unnamed isolated vertices get fresh numeric labels
        names = set(G.vertex_labels())
        extra = [str(i) for i in range(2 * n) if str(i) not in names][: n - G.n]
        G = graph_from_labeled_edges(pairs, list(G.vertex_labels()) + extra)
    return G


def _build(n: int, idx: list[tuple[int, int]], labels: list[str] | None) -> Graph:
    try:
        return build_graph(n, idx, labels)
    except IndexOutOfRange as exc:
        raise MalformedInput(str(exc)) from None
