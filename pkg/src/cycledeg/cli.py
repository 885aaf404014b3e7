"""Command-line front end.

Subcommands::

    gen SPEC             build a family graph and print it
    degrees FILE --n N   per-vertex cycle degrees as CSV
    cycles FILE --n N    list every length-N cycle, one per line
    check FILE --n N     report whether the degrees are pairwise distinct
    verify SPEC [--n N]  compare the census against the family's prediction
    sweep FAMILY --param-range l=5..8[,n=5..6]
    search {max-sum,max-deg,exists} --order K --n N

Exit codes: 0 on success or a matching verification, 1 on a mismatch, a
failed ``check``, or an unmet ``--expect``, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .census import CycleLengthTooSmall, degree_profile, enumerate_cycles
from .digraph import GraphError
from .families import BadParameters, FamilySpec, build
from .search import (
    LONG_RUN_ENV,
    OrderTooLarge,
    exists_irregular,
    max_degree_sum,
    max_vertex_degree,
)
from .serialize import (
    EMIT_FORMATS,
    PARSE_FORMATS,
    ParseError,
    emit_graph,
    parse_graph,
    sniff_format,
)
from .verify import verify_family

_SEARCH_OBJECTIVES = {
    "max-sum": max_degree_sum,
    "max-deg": max_vertex_degree,
    "exists": exists_irregular,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycledeg",
        description="Oriented graphs with pairwise-distinct directed-cycle degrees: "
        "generators, brute-force census, formula verification, exhaustive search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a family graph and print it")
    p.add_argument("spec", help='family spec, e.g. "B7", "A:l=6,n=5", "D4M2:m=4"')
    p.add_argument("--format", choices=EMIT_FORMATS, default="json")
    p.add_argument("-o", "--output", default="-", help="output file (default stdout)")

    for name, help_text in (
        ("degrees", "per-vertex cycle degrees as CSV"),
        ("cycles", "list all cycles of the given length"),
        ("check", "exit 0 iff all cycle degrees are pairwise distinct"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file, or - for stdin")
        p.add_argument("--n", type=int, required=True, help="cycle length")
        p.add_argument("--format", choices=PARSE_FORMATS, default=None,
                       help="input format (default: sniff)")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="compare census against the family prediction")
    p.add_argument("spec")
    p.add_argument("--n", type=int, default=None, help="override the cycle length")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="verify a family over parameter ranges")
    p.add_argument("family", help='parametric family: A, B2L2, D4M2, D4M4')
    p.add_argument("--param-range", required=True,
                   help='ranges like "l=5..8,n=5..6" or "m=3..8"')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search", help="exhaustive scan over all graphs of an order")
    p.add_argument("objective", choices=sorted(_SEARCH_OBJECTIVES))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-long-runs", action="store_true",
                   help=f"with {LONG_RUN_ENV}=1, permit order-7 scans")
    p.add_argument("--expect", choices=("true", "false"), default=None,
                   help="for exists: exit 1 unless the result matches")
    p.add_argument("--json", action="store_true")
    return parser


def _read_graph(path: str, declared: str | None):
    if path == "-":
        data = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            data = fh.read()
    return parse_graph(data, declared or sniff_format(data))


def _write(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_ranges(text: str) -> dict[str, range]:
    ranges: dict[str, range] = {}
    for item in text.split(","):
        name, sep, span = item.partition("=")
        name = name.strip().lower()
        if not sep or name not in ("l", "n", "m"):
            raise BadParameters(f"bad parameter range {item!r}")
        lo, dots, hi = span.partition("..")
        try:
            low = int(lo)
            high = int(hi) if dots else low
        except ValueError:
            raise BadParameters(f"bad parameter range {item!r}") from None
        ranges[name] = range(low, high + 1)
    return ranges


def _report_lines(report) -> list[str]:
    lines = [
        f"target: {report.target}",
        f"cycle length: {report.cycle_length}",
        f"total cycles: {report.measured.total_cycles}",
        f"measured: {' '.join(map(str, report.measured.degrees))}",
    ]
    if report.predicted is None:
        lines.append("predicted: (none at this cycle length)")
    else:
        lines.append(f"predicted: {' '.join(map(str, report.predicted))}")
    for vertex, want, got in report.mismatches:
        lines.append(f"  vertex {vertex}: predicted {want}, measured {got}")
    lines.append(f"distinct: {'yes' if report.distinct else 'no'}")
    lines.append(report.verdict)
    return lines


def _report_json(report) -> dict:
    return {
        "target": report.target,
        "cycle_length": report.cycle_length,
        "predicted": list(report.predicted) if report.predicted is not None else None,
        "measured": list(report.measured.degrees),
        "total_cycles": report.measured.total_cycles,
        "verdict": report.verdict,
        "mismatches": [list(m) for m in report.mismatches],
        "distinct": report.distinct,
    }


def _cmd_gen(args) -> int:
    graph = build(args.spec)
    _write(emit_graph(graph, args.format), args.output)
    return 0


def _cmd_degrees(args) -> int:
    graph = _read_graph(args.file, args.format)
    profile = degree_profile(graph, args.n, jobs=args.jobs)
    print("vertex,degree")
    for v in graph.vertices():
        print(f"{v},{profile.degree_of(v)}")
    return 0


def _cmd_cycles(args) -> int:
    graph = _read_graph(args.file, args.format)
    for witness in enumerate_cycles(graph, args.n, jobs=args.jobs):
        print(" ".join(map(str, witness.vertices)))
    return 0


def _cmd_check(args) -> int:
    graph = _read_graph(args.file, args.format)
    profile = degree_profile(graph, args.n, jobs=args.jobs)
    if profile.is_distinct():
        print("irregular")
        return 0
    print("not irregular")
    return 1


def _cmd_verify(args) -> int:
    report = verify_family(args.spec, n=args.n, jobs=args.jobs)
    if args.json:
        print(json.dumps(_report_json(report)))
    else:
        print("\n".join(_report_lines(report)))
    return 0 if report.matched else 1


def _cmd_sweep(args) -> int:
    ranges = _parse_ranges(args.param_range)
    family = args.family.upper()
    combos: list[FamilySpec] = []
    names = sorted(ranges)
    from itertools import product

    for values in product(*(ranges[name] for name in names)):
        kwargs = dict(zip(names, values))
        try:
            combos.append(FamilySpec(family, **kwargs))
        except BadParameters:
            continue
    if not combos:
        raise BadParameters(f"no valid parameter combination in {args.param_range!r}")
    results = []
    worst = 0
    for spec in combos:
        report = verify_family(spec, jobs=args.jobs)
        results.append(report)
        if not report.matched:
            worst = 1
        if not args.json:
            print(
                f"{report.target}: {report.verdict}, "
                f"distinct={'yes' if report.distinct else 'no'}"
            )
    if args.json:
        print(json.dumps([_report_json(r) for r in results]))
    return worst


def _cmd_search(args) -> int:
    if args.expect is not None and args.objective != "exists":
        print("error: --expect applies to the exists objective only", file=sys.stderr)
        return 2
    op = _SEARCH_OBJECTIVES[args.objective]
    report = op(args.order, args.n, jobs=args.jobs, allow_long_runs=args.allow_long_runs)
    value = report.value
    if args.json:
        payload = {
            "order": report.order,
            "cycle_length": report.cycle_length,
            "objective": report.objective,
            "value": value,
            "graphs_scanned": report.graphs_scanned,
            "witness": sorted(map(list, report.witness.arcs)) if report.witness else None,
        }
        print(json.dumps(payload))
    else:
        print(str(value).lower() if isinstance(value, bool) else value)
        if report.witness is not None:
            arcs = " ".join(f"{u}->{v}" for u, v in report.witness.sorted_arcs())
            print(f"witness ({report.witness.order} vertices): {arcs}")
        print(f"graphs scanned: {report.graphs_scanned}")
    if args.expect is not None:
        return 0 if value is (args.expect == "true") else 1
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "degrees": _cmd_degrees,
    "cycles": _cmd_cycles,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "search": _cmd_search,
}


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch, and return the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, BadParameters, GraphError, OrderTooLarge, CycleLengthTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
