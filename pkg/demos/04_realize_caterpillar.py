"""Turn an admissible caterpillar back into a horizontal strip and print its graph in DOT."""

import json
from pathlib import Path

from lltstrip import WeightedGraph, build_graph, caterpillar_decompose, check_admissible, graphs_isomorphic, realize

DATA = Path(__file__).with_name("data") / "caterpillar.json"


def main():
    g = WeightedGraph.from_json(DATA.read_text(encoding="utf-8"))
    print(f"graph: weights {g.vertex_weights}, edges {dict(g.edges)}")
    for cat in caterpillar_decompose(g):
        print(f"spine {cat.spine}, legs {cat.legs}")
    print(f"admissible: {bool(check_admissible(g))}")

    swapped = g.relabel([2, 1, 3, 4, 5, 6])
    print(f"with v1 and v2 swapped: {check_admissible(swapped).violations}")

    strip = realize(g)
    h = build_graph(strip)
    print(f"\nrealized strip {strip}")
    print(f"its graph is isomorphic to the input: {graphs_isomorphic(g, h)}")
    print(f"labels differ only where the definition orders equal-content rows: {dict(h.edges)}")
    print("\n" + h.to_dot())
    print("\nJSON:", json.dumps(h.to_json()))


if __name__ == "__main__":
    main()
