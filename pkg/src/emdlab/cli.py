"""Command-line front end.

    emdlab compute cycle:8 --all
    emdlab compute graph.txt --gamma-emd --format json
    emdlab family wheel 5..9 --gamma-emd
    emdlab verify --suite fixtures --suite trees --seed 7
    emdlab scan corpus.g6 --bounds gamma-emd-floor

Exit codes: 0 ok, 1 mismatches or bound violations, 2 input error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter

from . import __version__
from .dominant_search import PARAMETERS, compute_parameters
from .families import FamilySpecError, generate, parse_family
from .formats import emit_graph6, parse_edge_list_text, read_graph_file
from .formulas import BOUND_IDS, bound_checks, predict
from .graph_core import GraphError
from .search import DEFAULT_BUDGET, BudgetExceeded
from . import verify as vf

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _positive(text):
    val = float(text)
    if val <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return val


def _add_common(p):
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="seconds per search chain")
    p.add_argument("--workers", type=int, default=1, help="process pool size for suites")
    p.add_argument("--seed", type=int, default=7)


def _add_params(p):
    p.add_argument("--all", action="store_true", help="all six parameters (default)")
    for name in PARAMETERS:
        p.add_argument("--" + name.replace("_", "-"), dest=name, action="store_true")


def _selected(args) -> list[str]:
    chosen = [name for name in PARAMETERS if getattr(args, name)]
    return list(PARAMETERS) if args.all or not chosen else chosen


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="emdlab", description="Exact graph parameters and checks.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="parameters of one graph")
    p.add_argument("input", help="family spec (cycle:8), edge-list or graph6 file, or - for stdin")
    _add_params(p)
    _add_common(p)

    p = sub.add_parser("family", help="closed form against exact value over a range")
    p.add_argument("kind", help="family kind, optionally with fixed leading parameters (kb:2)")
    p.add_argument("range", help="n or lo..hi")
    _add_params(p)
    _add_common(p)

    p = sub.add_parser("verify", help="run verification suites and emit a JSON report")
    p.add_argument("--suite", action="append", choices=vf.SUITES + ("all",),
                   help="repeatable; default all")
    p.add_argument("--max-n", type=int, default=16, help="largest family parameter")
    p.add_argument("--count", type=int, default=200, help="random trees")
    p.add_argument("--tree-max-n", type=int, default=12)
    p.add_argument("--corpus", default="corpus-n6.g6", help="shipped corpus name or graph6 path")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    _add_common(p)
    p.set_defaults(format="json")

    p = sub.add_parser("scan", help="evaluate bounds over a graph6 file")
    p.add_argument("file", help="graph6 file, or the name of a shipped corpus")
    p.add_argument("--bounds", default="all", help="comma-separated bound ids or 'all'")
    p.add_argument("--out")
    _add_common(p)
    p.set_defaults(format="json")
    return ap


def load_graph(text: str):
    if text == "-":
        return parse_edge_list_text(sys.stdin.read())
    if os.path.exists(text):
        return read_graph_file(text)
    if ":" in text:
        return generate(parse_family(text))
    raise InputError(f"{text!r} is neither a file nor a family spec")


def _witness_text(w) -> str:
    return "[" + ", ".join(map(str, sorted(w))) + "]"


def _print_rows(header, rows, out=None):
    out = out or sys.stdout
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    for row in [header] + rows:
        print("  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip(), file=out)


def cmd_compute(args) -> int:
    g = load_graph(args.input)
    g.require_connected()
    names = _selected(args)
    res = compute_parameters(g, names, budget=args.budget)
    values = {k: r.value for k, r in res.items()}
    bounds = bound_checks(g, values) if len(values) >= 2 else []
    if args.format == "json":
        doc = {
            "input": args.input,
            "n": g.n,
            "m": g.m,
            "graph6": emit_graph6(g),
            "parameters": {k: {"value": r.value, "witness": sorted(r.witness)} for k, r in res.items()},
            "bounds": [{"bound_id": b.bound_id, "holds": b.holds, "slack": b.slack, "relation": b.relation}
                       for b in bounds],
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(f"graph {args.input}: n={g.n} m={g.m} graph6={emit_graph6(g)}")
    _print_rows(["parameter", "value", "witness"],
                [[k, r.value, _witness_text(r.witness)] for k, r in res.items()])
    if bounds:
        print()
        _print_rows(["bound", "holds", "slack", "relation"],
                    [[b.bound_id, "yes" if b.holds else "NO", "-" if b.slack is None else b.slack, b.relation]
                     for b in bounds])
    return EXIT_OK


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise InputError(f"bad range {text!r}; use n or lo..hi") from None
    if hi_i < lo_i:
        raise InputError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def cmd_family(args) -> int:
    names = _selected(args)
    prefix = args.kind + ("," if ":" in args.kind else ":")
    rows, doc = [], []
    mismatches = 0
    for n in _parse_range(args.range):
        text = f"{prefix}{n}"
        spec = parse_family(text)
        g = generate(spec)
        res = compute_parameters(g, names, budget=args.budget)
        for name in names:
            if name not in res:
                continue
            r, pred = res[name], predict(name, spec)
            if pred is None:
                status = "out-of-domain"
            else:
                status = "match" if pred.value == r.value else "mismatch"
            mismatches += status == "mismatch"
            rows.append([text, name, "-" if pred is None else pred.value, r.value, status,
                         _witness_text(r.witness)])
            doc.append({"instance": text, "parameter": name, "predicted": pred and pred.value,
                        "computed": r.value, "status": status, "witness": sorted(r.witness)})
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        _print_rows(["instance", "parameter", "predicted", "exact", "status", "witness"], rows)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _emit_report(report: dict, args) -> None:
    text = vf.report_json(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    elif args.format == "json":
        sys.stdout.write(text)
    if args.format == "table" or args.out:
        bad = Counter((c["theorem_id"], c["status"]) for c in report["checks"]
                      if c["status"] not in ("match", "out-of-domain"))
        first = {}
        for c in report["checks"]:
            first.setdefault((c["theorem_id"], c["status"]), c["instance"])
        if args.format == "table" and bad:
            _print_rows(["theorem", "status", "count", "first instance"],
                        [[tid, st, n, first[tid, st]] for (tid, st), n in bad.items()])
        summary = " ".join(f"{k}={v}" for k, v in report["summary"].items())
        print(summary, file=sys.stderr if args.format == "json" else sys.stdout)


def cmd_verify(args) -> int:
    suites = vf.SUITES if not args.suite or "all" in args.suite else tuple(
        s for s in vf.SUITES if s in args.suite)
    config = vf.VerifyConfig(suites=suites, max_n=args.max_n, tree_count=args.count,
                             tree_max_n=args.tree_max_n, seed=args.seed, budget=args.budget,
                             workers=args.workers, corpus=args.corpus)
    checks = vf.run_suites(config)
    report = vf.build_report(checks, config)
    _emit_report(report, args)
    return vf.exit_status(report["summary"])


def cmd_scan(args) -> int:
    if args.bounds == "all":
        bounds = BOUND_IDS
    else:
        bounds = tuple(b.strip() for b in args.bounds.split(",") if b.strip())
        unknown = set(bounds) - set(BOUND_IDS)
        if unknown:
            raise InputError(f"unknown bound ids: {', '.join(sorted(unknown))}")
    lines = vf.corpus_lines(args.file)
    checks = vf.run_exhaustive_scan(lines, bounds, args.budget, args.workers)
    config = {"command": "scan", "file": os.path.basename(args.file), "bounds": list(bounds),
              "budget": args.budget, "workers": args.workers, "seed": args.seed}
    report = vf.build_report(checks, config)
    for c in checks:
        if c.status == "error":
            print(f"{c.instance}: {c.note}", file=sys.stderr)
    _emit_report(report, args)
    return vf.exit_status(report["summary"])


COMMANDS = {"compute": cmd_compute, "family": cmd_family, "verify": cmd_verify, "scan": cmd_scan}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, FamilySpecError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
