"""Brute-force LLT expansion of a three-row strip, its weighted graph, and the tableau of maximal inversions."""

from lltstrip import (
    M_total,
    attack_pairs,
    brute_force_llt,
    build_graph,
    format_expansion,
    inversions,
    is_triangle_free,
    max_inversion_tableau,
    parse_strip,
)


def main():
    strip = parse_strip("4/0,5/2,2/0")
    print(f"strip {strip}: {strip.size} cells in {len(strip)} rows")

    expansion = brute_force_llt(strip)
    print("\nSchur expansion (entries at most the number of rows):")
    print(format_expansion(expansion))
    print(f"\nsum of all coefficients at q = 1: {sum(c.at_one() for c in expansion.terms.values())}")

    g = build_graph(strip)
    print(f"\nweighted graph: vertex weights {g.vertex_weights}, edges {dict(g.edges)}")
    print(f"triangle-free: {is_triangle_free(g)} (so the cocharge formula does not apply here)")

    t = max_inversion_tableau(strip)
    print(f"\nmaximal tableau  {t}")
    print(f"inversions {inversions(t).total} = total edge weight {g.total_edge_weight} = top q-degree {expansion.q_degree}")
    print(f"attacking pairs {attack_pairs(strip)}, M_total {M_total(strip)}")


if __name__ == "__main__":
    main()
