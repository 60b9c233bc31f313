"""Command line entry point.

Exit codes: 0 on success with no violations, 1 when a sweep, table or
witness audit finds violations, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .errors import BudgetExceeded, GraphError
from .families import by_name
from .forcing import PATH_COVER_CAP
from .graph import format_edge_list, read_edge_list, to_dot
from .linegraph import line_graph
from .sweep import (
    CONJECTURES,
    DEFAULT_BUDGET,
    WITNESS_FAMILIES,
    compute_invariant,
    reproduce_table,
    run_conjecture,
    verify_witnesses,
)

SYMBOLS = {"dim": "dim", "z": "Z", "ze": "Z_e", "pathcover": "P"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphinv", description=__doc__.splitlines()[0])
    parser.add_argument("--budget-nodes", type=int, default=DEFAULT_BUDGET, help="per-graph search budget")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of an edge-list graph")
    p.add_argument("file")
    p.add_argument("--invariant", choices=["dim", "z", "ze", "pathcover", "all"], default="all")
    p.add_argument("--line", action="store_true", help="compute on the line graph instead")
    p.add_argument("--witness", action="store_true", help="also print a witness set")

    p = sub.add_parser("family", help="emit a generated graph in edge-list format")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out")
    p.add_argument("--line", action="store_true", help="emit the line graph instead")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of an edge list")

    p = sub.add_parser("sweep", help="check a conjecture over a graph source")
    p.add_argument("conjecture", choices=sorted(CONJECTURES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--count", type=int, help="number of random trees for tree sources")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")

    p = sub.add_parser("table", help="reproduce the line-graph comparison table")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv", "md"], default="md")
    p.add_argument("--out")

    p = sub.add_parser("verify-witnesses", help="re-check every constructed witness")
    p.add_argument("--family", action="append", choices=WITNESS_FAMILIES)
    p.add_argument("--format", choices=["json", "csv", "summary"], default="summary")
    p.add_argument("--out")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    if fmt == "md":
        return report.to_markdown()
    lines = [f"{r.id}: {r.status}" for r in report.records]
    lines.append(f"checked {report.summary['checked']}, violations {len(report.violations)}")
    return "\n".join(lines) + "\n"


def _compute(args) -> int:
    g = read_edge_list(args.file)
    wanted = ["dim", "z", "ze", "pathcover"] if args.invariant == "all" else [args.invariant]
    for inv in wanted:
        if inv == "ze" and args.line:
            continue
        target = line_graph(g).lg if args.line else g
        if inv == "pathcover" and target.n > PATH_COVER_CAP:
            print(f"P = skipped (n > {PATH_COVER_CAP})")
            continue
        name = "p" if inv == "pathcover" else inv
        try:
            value, witness = compute_invariant(g, name, args.line, args.budget_nodes)
        except BudgetExceeded as exc:
            print(f"{SYMBOLS[inv]} in [{exc.lower}, {exc.upper}] (budget exceeded)")
            continue
        print(f"{SYMBOLS[inv]} = {value}")
        if args.witness and witness is not None:
            print(f"  witness: {' '.join(map(str, witness))}")
    return 0


def _family(args) -> int:
    g = by_name(args.name, args.params)
    if args.line:
        g = line_graph(g).lg
    _emit(to_dot(g) if args.dot else format_edge_list(g), args.out)
    return 0


def _sweep(args) -> int:
    spec = CONJECTURES[args.conjecture]
    source = spec.source
    if args.max_n is not None:
        source = replace(source, max_n=args.max_n)
    if args.count is not None:
        source = replace(source, count=args.count)
    report = run_conjecture(replace(spec, source=source), budget=args.budget_nodes, seed=args.seed)
    _emit(_render(report, args.format), args.out)
    print(
        f"{spec.statement()}: checked {report.summary['checked']}, "
        f"violations {len(report.violations)}, incomplete {len(report.summary['incomplete'])}",
        file=sys.stderr,
    )
    return 1 if report.violations else 0


def _table(args) -> int:
    report = reproduce_table(seed=args.seed, budget=args.budget_nodes)
    _emit(_render(report, args.format), args.out)
    return 1 if report.violations else 0


def _verify(args) -> int:
    report = verify_witnesses(args.family)
    _emit(_render(report, args.format), args.out)
    return 1 if report.violations else 0


COMMANDS = {"compute": _compute, "family": _family, "sweep": _sweep, "table": _table, "verify-witnesses": _verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"graphinv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
