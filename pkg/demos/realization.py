"""Which graphs are strong resolving graphs?  A small realization search.

Run with ``python demos/realization.py``.  The stars K_{1,2}, K_{1,3} and
the 4-cycle have no realization up to order 7; paths and cycles do.
"""

from __future__ import annotations

import time

from srgraph import emit_graph6, parse_spec
from srgraph.search import realization_search


def main() -> None:
    for target in ["K1,2", "K1,3", "C4", "P4", "P9", "C7"]:
        t0 = time.perf_counter()
        res = realization_search(parse_spec(target), 7)
        took = time.perf_counter() - t0
        line = f"{target:>5}: {res.outcome:9s} after {res.tested:5d} graphs ({took:.1f} s)"
        if res.graph is not None:
            line += f"  {emit_graph6(res.graph)} via {res.source}"
        print(line)


if __name__ == "__main__":
    main()
