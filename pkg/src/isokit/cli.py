"""Command-line front end.

Subcommands wire up the solver, the exact oracles, the block-family
generator, and the verification harness, with edge-list and graph6 input,
optional JSON output, and stable exit codes:

    0  success
    1  a checked property failed (invalid set, bound violation, mismatch)
    2  the input graph is a triangle (the one excluded case)
    3  the input graph is disconnected (and --any was not given)
    64 usage error
    74 input/output failure
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from .constructive import (
    GraphDisconnected,
    GraphIsTriangle,
    cycle_isolating_set,
    cycle_isolating_set_any,
)
from .exact import min_cycle_isolating, min_pattern_isolating
from .extremal import build_B
from .graph import Graph, build_graph, complete_graph, cycle_graph, path_graph
from .harness import fuzz_constructive, verify_lemma2, verify_theorem1, CSV_HEADER
from .isolation import is_cycle_isolating, is_pattern_isolating
from .serialize import (
    ParseError,
    RunRecord,
    emit_edgelist,
    emit_graph6,
    parse_edgelist,
    parse_graph6,
    trace_payload,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_TRIANGLE = 2
EXIT_DISCONNECTED = 3
EXIT_USAGE = 64
EXIT_IO = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_graph(source: str, fmt: str) -> Graph:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"cannot read {source}: {exc}", file=sys.stderr)
            raise SystemExit(EXIT_IO) from None
    if fmt == "auto":
        first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines()
                      if ln.split("#", 1)[0].strip()), "")
        fmt = "edgelist" if re.fullmatch(r"\d+\s+\d+", first) else "graph6"
    if fmt == "edgelist":
        g, warnings = parse_edgelist(text)
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        return g
    return parse_graph6(text)


_NAMED_PATTERNS = {"k": complete_graph, "p": path_graph, "c": cycle_graph}


def _parse_pattern(text: str) -> Graph:
    m = re.fullmatch(r"([kpc])(\d+)", text.lower())
    if m:
        return _NAMED_PATTERNS[m.group(1)](int(m.group(2)))
    return parse_graph6(text)


def _emit_record(args, record: RunRecord, human_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(record.to_json())
    else:
        for line in human_lines:
            print(line)


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph, args.format)
    t0 = time.perf_counter()
    try:
        if args.any:
            result = cycle_isolating_set_any(g)
        else:
            result = cycle_isolating_set(g)
    except GraphIsTriangle as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRIANGLE
    except GraphDisconnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    elapsed = time.perf_counter() - t0
    payload = {
        "set": sorted(result.vertices),
        "size": result.size,
        "bound": result.bound,
        "valid": result.valid,
    }
    lines = [
        "D = " + (" ".join(map(str, sorted(result.vertices))) or "(empty)"),
        f"size = {result.size}",
        f"bound = {result.bound}",
        f"valid = {str(result.valid).lower()}",
    ]
    if args.trace:
        payload["trace"] = trace_payload(result.trace)
        lines += [
            f"trace[{i}] {row['case_label']} added={row['added']} removed={row['removed']}"
            for i, row in enumerate(trace_payload(result.trace))
        ]
    record = RunRecord(args.graph, "solve", payload, elapsed)
    _emit_record(args, record, lines)
    return EXIT_OK


def _cmd_exact(args) -> int:
    g = _read_graph(args.graph, args.format)
    t0 = time.perf_counter()
    if args.pattern:
        result = min_pattern_isolating(g, _parse_pattern(args.pattern))
        op = "exact-pattern"
    else:
        result = min_cycle_isolating(g)
        op = "exact-cycle"
    elapsed = time.perf_counter() - t0
    payload = {
        "minimum": result.minimum,
        "witness": sorted(result.witness),
        "subsets_examined": result.subsets_examined,
    }
    lines = [
        f"minimum = {result.minimum}",
        "witness = " + (" ".join(map(str, sorted(result.witness))) or "(empty)"),
        f"subsets_examined = {result.subsets_examined}",
    ]
    _emit_record(args, RunRecord(args.graph, op, payload, elapsed), lines)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph, args.format)
    try:
        chosen = [int(tok) for tok in args.set.split(",") if tok.strip() != ""]
    except ValueError:
        print(f"error: --set expects comma-separated integers, got {args.set!r}",
              file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    try:
        if args.pattern:
            ok = is_pattern_isolating(g, chosen, _parse_pattern(args.pattern))
        else:
            ok = is_cycle_isolating(g, chosen)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - t0
    payload = {"set": sorted(chosen), "valid": ok}
    _emit_record(args, RunRecord(args.graph, "verify", payload, elapsed),
                 [f"valid = {str(ok).lower()}"])
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_gen(args) -> int:
    if args.family != "b":
        print(f"error: unknown family {args.family!r}", file=sys.stderr)
        return EXIT_USAGE
    g = build_B(args.n, _parse_pattern(args.pattern))
    if args.format == "edgelist":
        sys.stdout.write(emit_edgelist(g))
    else:
        print(emit_graph6(g))
    return EXIT_OK


def _cmd_enum(args) -> int:
    t0 = time.perf_counter()
    report = verify_theorem1(args.n)
    elapsed = time.perf_counter() - t0
    if args.json:
        payload = {
            "n": report.n,
            "graphs_checked": report.graphs_checked,
            "max_iota_c": report.max_iota_c,
            "expected": report.expected,
            "extremal_count": report.extremal_count,
            "all_bounds_held": report.all_bounds_held,
            "failures": [{"graph6": g6} for g6 in report.failures],
        }
        print(RunRecord(f"enum:n={args.n}", "enum", payload, elapsed).to_json())
    else:
        print(CSV_HEADER)
        print(report.csv_row())
        for g6 in report.failures:
            print(json.dumps({"graph6": g6}), file=sys.stderr)
    return EXIT_OK if report.all_bounds_held else EXIT_VIOLATION


def _cmd_lemma2(args) -> int:
    t0 = time.perf_counter()
    report = verify_lemma2(_parse_pattern(args.pattern), args.nmax)
    elapsed = time.perf_counter() - t0
    if args.json:
        payload = {
            "pattern_order": report.pattern_order,
            "values": {str(n): v for n, v in sorted(report.values.items())},
            "skipped": list(report.skipped),
            "mismatches": [list(row) for row in report.mismatches],
            "all_match": report.all_match,
        }
        print(RunRecord(f"lemma2:{args.pattern}", "lemma2", payload, elapsed).to_json())
    else:
        for n, v in sorted(report.values.items()):
            print(f"n={n} value={v}")
        for n in report.skipped:
            print(f"n={n} skipped (prediction undefined)")
        print(f"all_match = {str(report.all_match).lower()}")
    return EXIT_OK if report.all_match else EXIT_VIOLATION


def _cmd_fuzz(args) -> int:
    t0 = time.perf_counter()
    report = fuzz_constructive(args.trials, args.nmax, args.seed)
    elapsed = time.perf_counter() - t0
    if args.json:
        payload = {
            "trials": report.trials,
            "n_max": report.n_max,
            "seed": report.seed,
            "branch_histogram": dict(sorted(report.branch_histogram.items())),
            "violations": [
                {"trial": v.trial, "seed": v.trial_seed, "graph6": v.graph6,
                 "message": v.message}
                for v in report.violations
            ],
        }
        print(RunRecord(f"fuzz:seed={args.seed}", "fuzz", payload, elapsed).to_json())
    else:
        for label, count in sorted(report.branch_histogram.items()):
            print(f"{label} {count}")
        print(f"violations = {len(report.violations)}")
        for v in report.violations:
            print(json.dumps({"trial": v.trial, "seed": v.trial_seed,
                              "graph6": v.graph6, "message": v.message}),
                  file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _add_graph_arg(sub) -> None:
    sub.add_argument("graph", help="path to a graph file, or - for stdin")
    sub.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                     default="auto", help="input format (default: sniff)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="isokit", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="constructive cycle-isolating set within n/4")
    _add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true", help="include per-branch trace")
    p.add_argument("--any", action="store_true",
                   help="accept disconnected or triangle inputs (per-component)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exact", help="exact minimum by exhaustive search")
    _add_graph_arg(p)
    p.add_argument("--pattern", help="isolate this pattern instead of all cycles "
                   "(k3, p4, c5, ... or a graph6 string)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("verify", help="check a candidate isolating set")
    _add_graph_arg(p)
    p.add_argument("--set", required=True, help="comma-separated vertex labels")
    p.add_argument("--pattern", help="verify pattern isolation instead of cycles")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="generate an extremal block-family graph")
    p.add_argument("--family", default="b", help="family name (only: b)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", default="k3")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("enum", help="exhaustive bound check over all connected "
                       "labeled graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("lemma2", help="block-family prediction vs exact oracle")
    p.add_argument("--pattern", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lemma2)

    p = sub.add_parser("fuzz", help="randomized solver check")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--seed", type=int, required=True,
                   help="explicit seed; all output is deterministic given flags")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse usage errors and -h carry the code
        return exc.code if isinstance(exc.code, int) else 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
