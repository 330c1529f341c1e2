from __future__ import annotations

import networkx as nx
from hypothesis import settings
from hypothesis import strategies as st

from srgraph.graph import Graph, build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = list(chosen)
    if connected:
        # hang every vertex off an earlier one so the graph is connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.append((u, v))
    return build_graph(n, edges)


def connected_graphs(min_n: int = 2, max_n: int = 7):
    return graphs(min_n, max_n, connected=True)


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))


def to_nx(G: Graph) -> nx.Graph:
    X = nx.Graph()
    X.add_nodes_from(range(G.n))
    X.add_edges_from(G.edges())
    return X


def from_nx(X: nx.Graph) -> Graph:
    nodes = list(X.nodes())
    where = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(where[u], where[v]) for u, v in X.edges()], [str(v) for v in nodes])


def label_set(G: Graph, S) -> set[str]:
    return {G.label(v) for v in S}


# ---------------------------------------------------------------------------
# Acceptance criteria: one pass/fail line per criterion in the summary
# ---------------------------------------------------------------------------

_criteria: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    info = dict(report.user_properties).get("criterion")
    if info is None or report.when == "teardown":
        return
    number, title = info
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "seconds": 0.0})
    entry["seconds"] += report.duration  # setup time includes shared fixtures
    if report.when == "call" or report.failed:
        entry["ok"] = entry["ok"] and report.passed


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", tuple(mark.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        verdict = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({e['seconds']:.1f} s)  {e['title']}")
