"""One step of the inductive rewrite: G(s) = q G(s') + (1 - q) G(s'')."""

from lltstrip import (
    apply_inductive_relation,
    brute_force_llt,
    build_graph,
    normalize_for_induction,
    parse_strip,
)
from lltstrip.qschur import QPoly, q


def main():
    strip = parse_strip("6/5,9/6,7/2,4/0")
    found, k = normalize_for_induction(strip)
    print(f"strip {strip}; rewrite the rows {found[k]} and {found[k + 1]} (positions {k}, {k + 1})")

    swapped, merged = apply_inductive_relation(found, k)
    for name, s in (("s'", swapped), ("s''", merged)):
        g = build_graph(s)
        print(f"  {name} = {s}: weights {g.vertex_weights}, edges {dict(g.edges)}")

    n = len(strip)
    lhs = brute_force_llt(strip, n)
    rhs = brute_force_llt(swapped, n) * q + brute_force_llt(merged, n) * QPoly({0: 1, 1: -1})
    print(f"\nG(s) == q G(s') + (1 - q) G(s''): {lhs == rhs}")


if __name__ == "__main__":
    main()
