"""Search for graphs whose strong resolving graph is a given target.

Known constructions for the target's shape are tried first.  The search
then walks the connected isomorphism classes by increasing order and stops
at the first class ``G`` with ``srg(G) ≅ H``.  Progress can be written to a
frontier file (JSON) holding the next (order, class index) together with
the graph6 code of every class already tested, so a long run can be split
and the log re-checked independently.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidParameter, MalformedInput, OrderTooLarge
from .families import CLASSES_MAX_ORDER, graph_classes, parse_spec
from .graph import Graph, is_complete, is_path_graph
from .io import emit_graph6, parse_graph6
from .iso import are_isomorphic
from .srg import boundary, srg

SEARCH_MAX_ORDER = CLASSES_MAX_ORDER

FOUND = "FOUND"
EXHAUSTED = "EXHAUSTED"
ABORTED = "ABORTED"


@dataclass
class RealizationResult:
    target: Graph
    max_order: int
    outcome: str
    graph: Graph | None = None
    source: str = ""  # "candidate <spec>" or "search"
    tested: int = 0
    reason: str = ""

    def to_json(self) -> dict:
        out = {
            "target": emit_graph6(self.target),
            "max_order": self.max_order,
            "outcome": self.outcome,
            "tested": self.tested,
        }
        if self.graph is not None:
            out["graph"] = emit_graph6(self.graph)
            out["source"] = self.source
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class Frontier:
    target: str
    max_order: int
    order: int = 1
    cursor: int = 0
    log: list[str] = field(default_factory=list)

    def save(self, path: str | Path) -> None:
        data = {
            "target": self.target,
            "max_order": self.max_order,
            "order": self.order,
            "cursor": self.cursor,
            "log": self.log,
        }
        tmp = Path(str(path) + ".tmp")
        tmp.write_text(json.dumps(data) + "\n", encoding="utf-8")
        tmp.replace(path)

    @classmethod
    def load(cls, path: str | Path) -> "Frontier":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
            return cls(data["target"], data["max_order"], data["order"], data["cursor"], list(data["log"]))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise MalformedInput(f"bad frontier file {path}: {exc}") from None


def candidate_specs(H: Graph) -> list[str]:
    """Known constructions realizing paths, cycles and complete graphs."""
    n = H.n
    out: list[str] = []
    if is_path_graph(H):
        if n == 2:
            out.append("P2")
        elif n == 4:
            out.append("join(P4)")
        elif n >= 5:
            out.append(f"FP({n})")
    if n >= 3 and H.edge_count == n and all(d == 2 for d in H.degrees()) and H.is_connected():
        out.append("K3" if n == 3 else f"compl(C{n})")
    if is_complete(H) and n >= 2:
        out.append(f"K{n}")
    return list(dict.fromkeys(out))


def _matches(G: Graph, H: Graph) -> bool:
    if len(boundary(G).boundary) != H.n:
        return False
    R = srg(G)
    return R.edge_count == H.edge_count and are_isomorphic(R, H)


def _scan(target_g6: str, order: int, start: int, stop: int) -> int | None:
    """Index of the first matching class in ``[start, stop)`` of this order."""
    H = parse_graph6(target_g6)
    classes = graph_classes(order)
    for i in range(start, stop):
        if _matches(classes[i], H):
            return i
    return None


def realization_search(
    H: Graph,
    max_order: int,
    candidates: list[str] | None = None,
    frontier_path: str | Path | None = None,
    resume: bool = False,
    jobs: int = 1,
    time_limit: float | None = None,
    block: int = 256,
) -> RealizationResult:
    """Find a connected ``G`` of order ``<= max_order`` with ``srg(G) ≅ H``.

    ``candidates`` are spec strings tried before the search; ``None`` means
    the built-in constructions from :func:`candidate_specs`.  Candidates may
    exceed ``max_order``.  With ``frontier_path`` the search state is saved
    after every block of classes (and on abort); ``resume`` continues from it.
    """
    if max_order > SEARCH_MAX_ORDER:
        raise OrderTooLarge(f"realization search limited to order {SEARCH_MAX_ORDER}")
    if max_order < 1:
        raise InvalidParameter("max_order must be positive")
    target = emit_graph6(H)
    tested = 0
    for spec in candidate_specs(H) if candidates is None else candidates:
        G = parse_spec(spec)
        tested += 1
        if G.is_connected() and _matches(G, H):
            return RealizationResult(H, max_order, FOUND, G, f"candidate {spec}", tested)

    if frontier_path is not None and resume and Path(frontier_path).exists():
        fr = Frontier.load(frontier_path)
        if fr.target != target:
            raise InvalidParameter("frontier file belongs to a different target")
        fr.max_order = max_order
    else:
        fr = Frontier(target, max_order)
    t0 = time.perf_counter()
    # the SR graph has no isolated vertices and lives on at most n vertices
    if any(d == 0 for d in H.degrees()) or H.n == 0:
        fr.order = max_order + 1
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while fr.order <= max_order:
            if fr.order < max(H.n, 2):
                # fewer vertices than the target: nothing can match
                fr.log.extend(emit_graph6(g) for g in graph_classes(fr.order)[fr.cursor :])
                fr.order, fr.cursor = fr.order + 1, 0
                continue
            classes = graph_classes(fr.order)
            while fr.cursor < len(classes):
                stop = min(len(classes), fr.cursor + block * max(1, jobs))
                if pool is None:
                    hit = _scan(target, fr.order, fr.cursor, stop)
                else:
                    step = -(-(stop - fr.cursor) // jobs)
                    parts = [(s, min(stop, s + step)) for s in range(fr.cursor, stop, step)]
                    hits = pool.map(_scan, [target] * len(parts), [fr.order] * len(parts),
                                    [p[0] for p in parts], [p[1] for p in parts])
                    found = [h for h in hits if h is not None]
                    hit = min(found) if found else None
                end = stop if hit is None else hit + 1
                fr.log.extend(emit_graph6(classes[i]) for i in range(fr.cursor, end))
                tested += end - fr.cursor
                fr.cursor = end
                if hit is not None:
                    _save(fr, frontier_path)
                    return RealizationResult(H, max_order, FOUND, classes[hit], "search", tested)
                _save(fr, frontier_path)
                if time_limit is not None and time.perf_counter() - t0 > time_limit:
                    return RealizationResult(
                        H, max_order, ABORTED, tested=tested,
                        reason=f"time limit reached at order {fr.order}, class {fr.cursor}",
                    )
            fr.order, fr.cursor = fr.order + 1, 0
    except KeyboardInterrupt:
        _save(fr, frontier_path)
        return RealizationResult(H, max_order, ABORTED, tested=tested, reason="interrupted")
    finally:
        if pool is not None:
            pool.shutdown()
    _save(fr, frontier_path)
    return RealizationResult(H, max_order, EXHAUSTED, tested=tested)


def _save(fr: Frontier, path: str | Path | None) -> None:
    if path is not None:
        fr.save(path)


def recheck_log(frontier_path: str | Path) -> int:
    """Re-test every logged class against the frontier's target; returns the number of matches."""
    fr = Frontier.load(frontier_path)
    H = parse_graph6(fr.target)
    return sum(1 for code in fr.log if _matches_any(parse_graph6(code), H))


def _matches_any(G: Graph, H: Graph) -> bool:
    return G.n > 0 and G.is_connected() and G.n >= 2 and _matches(G, H)
