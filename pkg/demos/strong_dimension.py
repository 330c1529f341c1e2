"""Strong metric dimension of a few small graphs, computed two ways.

Run with ``python demos/strong_dimension.py``.
"""

from __future__ import annotations

from srgraph import boundary, dims_oracle, dims_via_srg, is_strong_generator, parse_spec, srg


def show(spec: str) -> None:
    G = parse_spec(spec)
    R = srg(G)
    oracle = dims_oracle(G)
    reduced = dims_via_srg(G)
    print(f"{spec:>16}  n={G.n:2d}  |boundary|={len(boundary(G).boundary):2d}  "
          f"srg edges={R.edge_count:3d}  dims={oracle.dimension} (subset search) "
          f"= {reduced.dimension} (vertex cover of srg)  basis {{{','.join(reduced.basis_labels(G))}}}")


def main() -> None:
    for spec in ["P6", "C7", "C8", "K5", "K2,3", "petersen", "fig:fig2", "fig:fig5", "pruefer(1,4,0,2)"]:
        show(spec)

    G = parse_spec("fig:fig5")
    S = [G.index(x) for x in "acdh"]
    print("\n{a,c,d,h} strongly resolves fig:fig5:", is_strong_generator(G, S))


if __name__ == "__main__":
    main()
