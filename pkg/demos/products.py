"""Strong resolving graphs of graph products against their closed forms.

Run with ``python demos/products.py``.
"""

from __future__ import annotations

from srgraph import ProductKind, are_isomorphic, parse_spec, product, srg


def main() -> None:
    # Cartesian product: the SR graph is the direct product of the factors' SR graphs
    for a, b in [("P3", "C5"), ("C4", "K1,3"), ("C5", "C5")]:
        G, H = parse_spec(a), parse_spec(b)
        lhs = srg(product(ProductKind.CARTESIAN, G, H))
        rhs = product(ProductKind.DIRECT, srg(G), srg(H))
        print(f"srg({a} □ {b}) ≅ srg({a}) × srg({b}): {are_isomorphic(lhs, rhs)}")

    # direct product of complete graphs: the SR graph is the Cartesian product
    for r, t in [(3, 3), (3, 4), (4, 4)]:
        Kr, Kt = parse_spec(f"K{r}"), parse_spec(f"K{t}")
        lhs = srg(product(ProductKind.DIRECT, Kr, Kt))
        print(f"srg(K{r} × K{t}) ≅ K{r} □ K{t}: {are_isomorphic(lhs, product(ProductKind.CARTESIAN, Kr, Kt))}")

    P = product(ProductKind.STRONG, parse_spec("P3"), parse_spec("C5"))
    print(f"\nP3 ⊠ C5 has {P.n} vertices and {P.edge_count} edges; its SR graph has {srg(P).edge_count} edges")


if __name__ == "__main__":
    main()
