"""Random strips against Schur positivity and the two graph conjectures (evidence only)."""

import sys

from lltstrip import conjecture_fuzz


def main(count: int = 200):
    report = conjecture_fuzz(seed=0, count=count, max_rows=4, max_cells=4)
    s = report["summary"]
    print(f"{s['count']} strips (seed {s['seed']}, <= {s['max_rows']} rows, <= {s['max_cells']} cells per row)")
    print(f"  Schur-positivity violations: {s['positivity_violations']}")
    print(f"  isomorphic pairs compared:   {s['isomorphic_pairs_compared']}")
    print(f"  admissible relabelings:      {s['relabelings_compared']}")
    print(f"  counterexamples archived:    {s['counterexamples']}")
    for cx in report["counterexamples"][:3]:
        print("  ", cx["conjecture"], cx["strips"])


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 200)
