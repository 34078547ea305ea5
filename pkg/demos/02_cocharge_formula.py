"""Schur expansion of a strip with a triangle-free graph, read off from cocharge statistics."""

from lltstrip import (
    brute_force_llt,
    build_graph,
    cocharge_ij,
    cocharge_pi,
    enumerate_ssyt_weight,
    formula_expansion,
    parse_strip,
)


def main():
    strip = parse_strip("6/5,9/6,7/2,4/0")
    g = build_graph(strip)
    print(f"strip {strip}; vertex weights {g.vertex_weights}; edges {dict(g.edges)}")

    print("\ntableaux of shape (7,3,3) with weight = vertex weights:")
    for t in enumerate_ssyt_weight(g.vertex_weights, (7, 3, 3)):
        parts = [f"min({m}, {cocharge_ij(t, i, j)})" for (i, j), m in g.edges.items()]
        print(f"  {t}:  {' + '.join(parts)} = {cocharge_pi(t, g)}")

    formula = formula_expansion(strip)
    print(f"\ncoefficient of s[7,3,3]: {formula[(7, 3, 3)]}")
    brute = brute_force_llt(strip)
    print(f"formula agrees with brute force on all {len(brute)} Schur terms: {formula == brute}")


if __name__ == "__main__":
    main()
