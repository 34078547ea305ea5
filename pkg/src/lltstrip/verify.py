"""Per-strip verification reports and the conjecture fuzzer.

Every check produces one JSON-serialisable record
``{"input": ..., "check": ..., "pass": ..., "details": ...}``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from .formula import (
    apply_commute_swap,
    formula_from_graph,
    formula_expansion,
    inductive_eligible,
    inductive_formal_sum,
    is_labeled_path,
    merge_eligible,
    merge_identity,
    path_expansion,
)
from .graph import WeightedGraph, build_graph, check_admissible, commutes, graphs_isomorphic, is_triangle_free, realize
from .llt import (
    M_total,
    attack_pairs,
    brute_force_llt,
    default_num_vars,
    inversions,
    kappa_rotate,
    max_inversion_tableau,
)
from .qschur import PositivityViolation, SchurExpansion, product_of_schurs
from .sampling import random_strips
from .shapes import HorizontalStrip, conjugate_multiskew


def record(inp: str, check: str, ok: bool, **details) -> dict:
    return {"input": inp, "check": check, "pass": bool(ok), "details": details}


def _diff(a: SchurExpansion, b: SchurExpansion) -> dict:
    return {str(list(lam)): [str(x), str(y)] for lam, (x, y) in a.coefficient_difference(b).items()}


def verify_strip(s: HorizontalStrip, num_vars: int | None = None, budget: int | None = None) -> list[dict]:
    """Run every applicable check on one strip. Raises ``BudgetExceeded`` when the input is too large."""
    inp = str(s)
    n = num_vars or default_num_vars(s)
    out: list[dict] = []
    try:
        G = brute_force_llt(s, n, budget)
    except PositivityViolation as exc:
        return [record(inp, "schur_positive", False, error=str(exc))]
    out.append(record(inp, "schur_positive", True, terms=len(G)))

    g = build_graph(s)
    mt = M_total(s)
    out.append(
        record(
            inp, "top_degree", G.q_degree == mt == g.total_edge_weight,
            q_degree=G.q_degree, M_total=mt, edge_weight=g.total_edge_weight,
        )
    )
    inv = inversions(max_inversion_tableau(s)).total
    out.append(record(inp, "max_inversion_tableau", inv == mt, inversions=inv, M_total=mt))

    product = product_of_schurs([(r.size,) for r in s])
    out.append(record(inp, "q_equals_one", G.at_one() == product, differences=_diff(G.at_one(), product)))

    rotated = kappa_rotate(s)
    out.append(record(inp, "kappa_invariance", brute_force_llt(rotated, n, budget) == G, rotated=str(rotated)))

    predicted = attack_pairs(s) - M_total(conjugate_multiskew(s))
    out.append(record(inp, "omega_min_degree", G.min_q_degree == predicted, min_degree=G.min_q_degree, predicted=predicted))

    if is_triangle_free(g):
        F = formula_expansion(s)
        out.append(record(inp, "formula", F == G, differences=_diff(F, G)))
        if is_labeled_path(g) and g.n > 1:
            out.append(record(inp, "path_formula", path_expansion(s) == F))
        realized = realize(g)
        gr = build_graph(realized)
        iso = graphs_isomorphic(gr, g)
        same = brute_force_llt(realized, n, budget) == G
        out.append(record(inp, "realize_roundtrip", iso and same, realized=str(realized), isomorphic=iso, equal_expansion=same))
    else:
        out.append(record(inp, "formula", True, skipped="graph has a triangle"))

    for k in range(len(s) - 1):
        r, rp = s[k], s[k + 1]
        if commutes(r, rp):
            swapped = apply_commute_swap(s, k)
            out.append(record(inp, f"commute@{k}", brute_force_llt(swapped, n, budget) == G, swapped=str(swapped)))
        if merge_eligible(r, rp):
            lhs, rhs = merge_identity(s, k)
            out.append(record(inp, f"merge@{k}", lhs.expand(n, budget) == rhs.expand(n, budget)))
        if inductive_eligible(r, rp):
            rhs = inductive_formal_sum(s, k)
            out.append(record(inp, f"inductive@{k}", rhs.expand(n, budget) == G, rhs=str(rhs)))
    return out


def all_passed(records: Iterable[dict]) -> bool:
    return all(r["pass"] for r in records)


# --- fuzzing ------------------------------------------------------------------


def _expand_job(args) -> tuple[str, dict | None, str | None]:
    strip, budget = args
    try:
        return str(strip), brute_force_llt(strip, None, budget).to_json(), None
    except PositivityViolation as exc:
        return str(strip), None, str(exc)


def parallel_map(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """Order-preserving map, fanned out to ``jobs`` processes when ``jobs > 1``."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _graph_key(g: WeightedGraph) -> tuple:
    degrees = sorted((g.weight(v), sorted(g.m(v, w) for w in g.neighbors(v))) for v in range(1, g.n + 1))
    return (g.n, tuple(sorted(g.vertex_weights)), tuple(sorted(g.edges.values())), repr(degrees))


def admissible_relabelings(g: WeightedGraph, limit: int | None = None) -> list[WeightedGraph]:
    """Distinct admissible graphs obtained by permuting the labels of ``g`` (``g`` itself excluded)."""
    seen = {g}
    out = []
    for perm in itertools.permutations(range(1, g.n + 1)):
        h = g.relabel(perm)
        if h in seen:
            continue
        seen.add(h)
        if check_admissible(h):
            out.append(h)
            if limit is not None and len(out) >= limit:
                break
    return out


def conjecture_fuzz(
    seed: int = 0,
    count: int = 500,
    max_rows: int = 4,
    max_cells: int = 4,
    jobs: int = 1,
    budget: int | None = None,
    relabelings: int = 3,
) -> dict:
    """Expand random strips and look for counterexamples to the two graph conjectures.

    Returns ``{"records": [...], "summary": {...}, "counterexamples": [...]}``.
    Counterexamples are reported, never raised.
    """
    strips = random_strips(seed, count, max_rows, max_cells)
    results = parallel_map(_expand_job, [(s, budget) for s in strips], jobs)
    records: list[dict] = []
    counterexamples: list[dict] = []
    expansions: dict[str, SchurExpansion] = {}
    violations = 0
    for text, data, error in results:
        if error is not None:
            violations += 1
            records.append(record(text, "schur_positive", False, error=error))
        else:
            expansions[text] = SchurExpansion.from_json(data)
            records.append(record(text, "schur_positive", True))

    # graph-isomorphism conjecture
    buckets: dict[tuple, list[list[tuple[HorizontalStrip, WeightedGraph]]]] = {}
    for s in strips:
        if str(s) not in expansions:
            continue
        g = build_graph(s)
        classes = buckets.setdefault(_graph_key(g), [])
        for cls in classes:
            if graphs_isomorphic(cls[0][1], g):
                cls.append((s, g))
                break
        else:
            classes.append([(s, g)])
    compared = 0
    for classes in buckets.values():
        for cls in classes:
            base_s, base_g = cls[0]
            base = expansions[str(base_s)]
            for s, g in cls[1:]:
                compared += 1
                other = expansions[str(s)]
                ok = other == base
                if not ok:
                    counterexamples.append(
                        {
                            "conjecture": "graph_isomorphism",
                            "strips": [str(base_s), str(s)],
                            "graphs": [base_g.to_json(), g.to_json()],
                            "expansions": [base.to_json(), other.to_json()],
                            "differences": _diff(base, other),
                        }
                    )
                records.append(record(str(s), "conjecture_graph_isomorphism", ok, representative=str(base_s), archived=not ok))

    # labeling independence of the formula on admissible relabelings
    relabel_checks = 0
    seen_graphs: set[WeightedGraph] = set()
    for s in strips:
        g = build_graph(s)
        if str(s) not in expansions or not is_triangle_free(g) or g in seen_graphs:
            continue
        seen_graphs.add(g)
        base = expansions[str(s)]
        for h in admissible_relabelings(g, relabelings):
            relabel_checks += 1
            F = formula_from_graph(h)
            realized = realize(h)
            G2 = brute_force_llt(realized, None, budget)
            ok = F == base and G2 == base
            if not ok:
                counterexamples.append(
                    {
                        "conjecture": "labeling_independence",
                        "strips": [str(s), str(realized)],
                        "graphs": [g.to_json(), h.to_json()],
                        "expansions": [base.to_json(), F.to_json(), G2.to_json()],
                        "differences": _diff(base, F),
                    }
                )
            records.append(record(str(s), "conjecture_labeling", ok, relabeled=h.to_json(), realized=str(realized), archived=not ok))

    summary = {
        "seed": seed,
        "count": count,
        "max_rows": max_rows,
        "max_cells": max_cells,
        "positivity_violations": violations,
        "isomorphic_pairs_compared": compared,
        "relabelings_compared": relabel_checks,
        "counterexamples": len(counterexamples),
    }
    return {"records": records, "summary": summary, "counterexamples": counterexamples}


def verify_many(strips: Sequence[HorizontalStrip], jobs: int = 1, num_vars: int | None = None, budget: int | None = None) -> list[list[dict]]:
    return parallel_map(_verify_job, [(s, num_vars, budget) for s in strips], jobs)


def _verify_job(args) -> list[dict]:
    s, n, budget = args
    return verify_strip(s, n, budget)
