"""``lltstrip`` command line: expand, formula, graph, realize, cocharge, verify, fuzz.

Exit codes: 0 success, 1 failed verification, 2 parse error, 3 enumeration
budget exceeded, 4 precondition (triangle, inadmissible graph, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .formula import PreconditionError, TriangleError, cocharge_pi, formula_expansion
from .graph import GraphError, WeightedGraph, build_graph, realize
from .llt import DEFAULT_BUDGET, BudgetExceeded, brute_force_llt
from .qschur import SchurExpansion, format_expansion
from .shapes import HorizontalStrip, ShapeError, parse_strip, strip_to_json
from .tableaux import cocharge, cocharge_ij, parse_tableau
from .verify import all_passed, conjecture_fuzz, verify_many

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_BUDGET, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class UsageError(Exception):
    """Input could not be parsed."""


def _read_text(value: str) -> str:
    """The argument itself, or the file contents when it names an existing file (``@path`` forces a file)."""
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8")
    path = Path(value)
    if len(value) < 4096 and path.is_file():
        return path.read_text(encoding="utf-8")
    return value


def _strips(values: Sequence[str]) -> list[HorizontalStrip]:
    out = []
    for value in values:
        for line in _read_text(value).splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(parse_strip(line))
    if not out:
        raise ShapeError("no strip given")
    return out


def _graph(value: str) -> WeightedGraph:
    try:
        return WeightedGraph.from_json(_read_text(value))
    except (json.JSONDecodeError, GraphError) as exc:
        raise UsageError(f"cannot read graph: {exc}") from exc


def _emit_expansion(e: SchurExpansion, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(e.to_json(), sort_keys=True), file=out)
    else:
        print(format_expansion(e), file=out)


def _jsonl(records, out) -> None:
    for r in records:
        print(json.dumps(r, sort_keys=True), file=out)


def cmd_expand(args, out) -> int:
    for s in _strips(args.strip):
        _emit_expansion(brute_force_llt(s, args.vars, args.budget), args.format, out)
    return EXIT_OK


def cmd_formula(args, out) -> int:
    for s in _strips(args.strip):
        try:
            e = formula_expansion(s)
        except TriangleError as exc:
            raise TriangleError(f"{s}: {exc}; use `lltstrip expand \"{s}\"` instead") from exc
        _emit_expansion(e, args.format, out)
    return EXIT_OK


def cmd_graph(args, out) -> int:
    for s in _strips(args.strip):
        g = build_graph(s)
        if args.dot:
            print(g.to_dot(), file=out)
        else:
            print(json.dumps(g.to_json(), sort_keys=True), file=out)
    return EXIT_OK


def cmd_realize(args, out) -> int:
    g = _graph(args.graph)
    s = realize(g)
    if args.format == "json":
        print(json.dumps(strip_to_json(s), sort_keys=True), file=out)
    else:
        print(s, file=out)
    return EXIT_OK


def cmd_cocharge(args, out) -> int:
    t = parse_tableau(_read_text(args.tableau).strip())
    if args.graph is not None:
        g = _graph(args.graph)
        value = cocharge_pi(t, g)
    elif args.ij is not None:
        i, j = args.ij
        if not i < j:
            raise PreconditionError("--ij needs i < j")
        value = cocharge_ij(t, i, j)
    else:
        if not t.is_straight:
            raise PreconditionError("cocharge needs a straight-shape tableau")
        value = cocharge(t)
    print(value, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    reports = verify_many(_strips(args.strip), args.jobs, args.vars, args.budget)
    ok = True
    for records in reports:
        _jsonl(records, out)
        ok = ok and all_passed(records)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_fuzz(args, out) -> int:
    report = conjecture_fuzz(args.seed, args.count, args.rows, args.cells, args.jobs, args.budget, args.relabelings)
    _jsonl(report["records"], out)
    print(json.dumps({"summary": report["summary"]}, sort_keys=True), file=out)
    if args.archive:
        Path(args.archive).write_text(
            json.dumps(report["counterexamples"], indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    # conjecture counterexamples are archived, not failures; positivity violations are failures
    return EXIT_FAILED if report["summary"]["positivity_violations"] else EXIT_OK


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lltstrip", description="Horizontal-strip LLT polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def budgeted(p):
        p.add_argument("--vars", type=_positive, default=None, help="number of variables (default: rows)")
        p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="maximum tableaux to enumerate")

    def formatted(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("expand", help="Schur expansion by brute-force enumeration")
    p.add_argument("strip", nargs="+", help='strip text such as "4/0,5/2,2/0", or a file of strips')
    budgeted(p)
    formatted(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("formula", help="Schur expansion from the cocharge formula (triangle-free only)")
    p.add_argument("strip", nargs="+")
    formatted(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("graph", help="weighted graph of a strip as JSON")
    p.add_argument("strip", nargs="+")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("realize", help="a strip realizing an admissible weighted graph")
    p.add_argument("graph", help="graph JSON text or a path to a JSON file")
    formatted(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("cocharge", help="cocharge, cocharge_ij or graph cocharge of a tableau")
    p.add_argument("--tableau", required=True, help='bottom row first, e.g. "1,1,2;2,3;3"')
    group = p.add_mutually_exclusive_group()
    group.add_argument("--ij", nargs=2, type=int, metavar=("I", "J"))
    group.add_argument("--graph", help="graph JSON text or file")
    p.set_defaults(func=cmd_cocharge)

    p = sub.add_parser("verify", help="run every applicable check; JSON lines")
    p.add_argument("strip", nargs="+")
    budgeted(p)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="random strips against positivity and the graph conjectures; JSON lines")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_positive, default=500)
    p.add_argument("--rows", type=_positive, default=4, help="maximum rows per strip")
    p.add_argument("--cells", type=_positive, default=4, help="maximum cells per row")
    p.add_argument("--relabelings", type=int, default=3, help="admissible relabelings tried per graph")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--archive", help="write counterexamples to this JSON file")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TriangleError, PreconditionError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ShapeError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
