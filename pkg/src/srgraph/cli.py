"""Command-line interface: ``srgraph <command> ...``.

Graph arguments are a file (``.g6`` for graph6, anything else an edge
list, ``-`` for standard input) or a spec string such as ``C5``,
``K2,3``, ``FP(9)`` or ``g6:Dhc``.  Exit status is 0 on success or PASS, 1
on FAIL (or a negative answer from ``iso``), 2 on usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import families, search, theorems
from .errors import GraphError
from .graph import Graph
from .io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .iso import canonical_form, isomorphism
from .products import ProductKind, product
from .srg import g_star, srg, srg_plus_i, srs
from .strongdim import dims_oracle, dims_via_srg, is_strong_generator


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit; keep control of the status
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# Graph input and output
# ---------------------------------------------------------------------------


def load_graph(arg: str) -> tuple[Graph, str]:
    """Graph plus the format it was read in (``graph6``, ``edges`` or ``spec``)."""
    if arg == "-":
        text = sys.stdin.read()
        return _from_text(text, graph6=_looks_like_graph6(text))
    path = Path(arg)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        return _from_text(text, graph6=path.suffix == ".g6")
    return families.parse_spec(arg), "spec"


def _looks_like_graph6(text: str) -> bool:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    return len(lines) == 1 and " " not in lines[0].strip()


def _from_text(text: str, graph6: bool) -> tuple[Graph, str]:
    if graph6:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise UsageError("a .g6 input must hold exactly one graph")
        return parse_graph6(lines[0]), "graph6"
    return parse_edge_list(text), "edges"


def graph_json(G: Graph) -> dict:
    return {
        "n": G.n,
        "labels": list(G.vertex_labels()),
        "edges": [[G.label(u), G.label(v)] for u, v in G.edges()],
        "graph6": emit_graph6(G) if G.n <= 62 else None,
    }


def render(G: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(G) + "\n"
    if fmt == "edges":
        return emit_edge_list(G)
    return json.dumps(graph_json(G), ensure_ascii=False) + "\n"


def _format(args: argparse.Namespace, source: str) -> str:
    if args.format:
        return args.format
    return "edges" if source == "edges" else "graph6"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _graph_arg(args: argparse.Namespace) -> tuple[Graph, str]:
    arg = args.input if args.input is not None else args.graph
    if arg is None:
        raise UsageError("a graph is required (positional or --in)")
    return load_graph(arg)


def cmd_transform(args: argparse.Namespace) -> int:
    G, source = _graph_arg(args)
    fn = {"srg": srg, "srgi": srg_plus_i, "gstar": g_star, "srs": srs}[args.command]
    R = fn(G)
    if args.canonical:
        R = canonical_form(R).graph
    sys.stdout.write(render(R, _format(args, source)))
    return 0


def _parse_vertices(G: Graph, text: str) -> list[int]:
    names = [x for x in text.replace("{", "").replace("}", "").split(",") if x.strip()]
    return [G.index(x.strip()) for x in names]


def cmd_dims(args: argparse.Namespace) -> int:
    G, _ = _graph_arg(args)
    routes = ["oracle", "srg"] if args.route == "both" else [args.route]
    results = {}
    for route in routes:
        res = dims_oracle(G) if route == "oracle" else dims_via_srg(G)
        results[route] = {"dimension": res.dimension, "basis": res.basis_labels(G)}
    checked = None
    if args.basis:
        S = _parse_vertices(G, args.basis)
        checked = {"basis": G.names(S), "strong_generator": is_strong_generator(G, S)}
    if args.json:
        out = {"routes": results}
        if checked is not None:
            out["check"] = checked
        print(json.dumps(out, ensure_ascii=False))
    else:
        for route, r in results.items():
            print(r["dimension"])
            print(f"  route {route}: basis {{{','.join(r['basis'])}}}")
        if checked is not None:
            verdict = "is" if checked["strong_generator"] else "is not"
            print(f"{{{','.join(checked['basis'])}}} {verdict} a strong metric generator")
    if len({r["dimension"] for r in results.values()}) > 1:
        return 1
    if checked is not None and not checked["strong_generator"]:
        return 1
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    G, _ = load_graph(args.left)
    H, _ = load_graph(args.right)
    P = product(ProductKind.parse(args.kind), G, H)
    sys.stdout.write(render(P, args.format or "edges"))
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    G = families.parse_spec(args.spec)
    sys.stdout.write(render(G, args.format or "edges"))
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    G, _ = load_graph(args.left)
    H, _ = load_graph(args.right)
    mapping = isomorphism(G, H)
    if args.json:
        out = {"isomorphic": mapping is not None}
        if mapping is not None:
            out["mapping"] = {G.label(u): H.label(v) for u, v in mapping.items()}
        print(json.dumps(out, ensure_ascii=False))
    elif mapping is None:
        print("not isomorphic")
    else:
        print("isomorphic")
        for u, v in sorted(mapping.items()):
            print(f"  {G.label(u)} -> {H.label(v)}")
    return 0 if mapping is not None else 1


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem.lower() == "all":
        if args.instance:
            raise UsageError("--instance needs a single --theorem")
        reports = theorems.verify_all(args.max_order, jobs=args.jobs)
    else:
        reports = [
            theorems.verify_theorem(args.theorem, args.max_order, args.instance or None, jobs=args.jobs)
        ]
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, ensure_ascii=False, indent=1))
    else:
        for r in reports:
            print(r.summary())
    return 1 if any(r.verdict == "FAIL" for r in reports) else 0


def cmd_search(args: argparse.Namespace) -> int:
    H, _ = load_graph(args.target)
    candidates = None
    if args.no_candidates:
        candidates = []
    if args.candidate:
        candidates = list(args.candidate)
    frontier = args.resume or args.frontier
    res = search.realization_search(
        H,
        args.max_order,
        candidates=candidates,
        frontier_path=frontier,
        resume=args.resume is not None,
        jobs=args.jobs,
        time_limit=args.time_limit,
    )
    if args.json:
        print(json.dumps(res.to_json()))
    else:
        line = f"{res.outcome} (max order {res.max_order}, {res.tested} graphs tested)"
        if res.graph is not None:
            line += f"\n{emit_graph6(res.graph)}  via {res.source}"
        if res.reason:
            line += f"\n{res.reason}"
        print(line)
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="srgraph", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)

    def graph_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("graph", nargs="?", help="graph file or spec")
        sp.add_argument("--in", dest="input", help="graph file or spec")

    def fmt(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=["graph6", "edges", "json"])

    helps = {
        "srg": "strong resolving graph G_SR",
        "srgi": "G_SR+I (non-boundary vertices kept, isolated)",
        "gstar": "G* (distance >= 2 or true twins)",
        "srs": "G_SRS (MMD pairs that are not true twins)",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, help=text)
        graph_input(sp)
        fmt(sp)
        sp.add_argument("--canonical", action="store_true", help="relabel the result canonically")
        sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("dims", help="strong metric dimension")
    graph_input(sp)
    sp.add_argument("--route", choices=["oracle", "srg", "both"], default="srg")
    sp.add_argument("--basis", help="comma-separated vertex labels to test as a strong generator")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("product", help="graph product")
    sp.add_argument("--kind", required=True, help=", ".join(k.value for k in ProductKind))
    sp.add_argument("left")
    sp.add_argument("right")
    fmt(sp)
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("family", help="build a graph from a spec")
    sp.add_argument("spec")
    fmt(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("iso", help="isomorphism test (exit 1 when not isomorphic)")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("verify", help="check statements on their instance grids")
    sp.add_argument("--theorem", required=True, help="statement id or 'all'")
    sp.add_argument("--max-order", type=int)
    sp.add_argument("--instance", action="append", help="specs separated by ';' (repeatable)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="find G with srg(G) isomorphic to a target")
    sp.add_argument("--target", required=True, help="graph file or spec")
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--frontier", help="write progress to this file")
    sp.add_argument("--resume", help="continue from this frontier file")
    sp.add_argument("--candidate", action="append", help="spec to try before searching (repeatable)")
    sp.add_argument("--no-candidates", action="store_true", help="skip the built-in constructions")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--time-limit", type=float)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help()
            return 2
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"srgraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"srgraph: {exc}", file=sys.stderr)
        return 2


def run(argv: Sequence[str]) -> int:
    return main(list(argv))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
