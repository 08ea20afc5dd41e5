"""Run every verification suite, write the JSON report, and print a per-theorem tally.

Usage: python3 scripts/run_all_checks.py [--out report.json] [--workers 4] [--corpus corpus-n7.g6]
"""
import argparse
from collections import Counter, defaultdict

from emdlab.verify import VerifyConfig, build_report, exit_status, report_json, run_suites


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="report.json")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--corpus", default="corpus-n6.g6")
    args = ap.parse_args()

    config = VerifyConfig(workers=args.workers, seed=args.seed, corpus=args.corpus)
    checks = run_suites(config)
    report = build_report(checks, config)
    with open(args.out, "w") as fh:
        fh.write(report_json(report))

    tally = defaultdict(Counter)
    for c in checks:
        tally[c.theorem_id][c.status] += 1
    width = max(len(t) for t in tally)
    for tid in sorted(tally):
        counts = ", ".join(f"{k}={v}" for k, v in sorted(tally[tid].items()))
        flag = "  <--" if tally[tid]["mismatch"] or tally[tid]["error"] else ""
        print(f"{tid:{width}}  {counts}{flag}")
    print(" ".join(f"{k}={v}" for k, v in report["summary"].items()), f"-> {args.out}")
    return exit_status(report["summary"])


if __name__ == "__main__":
    raise SystemExit(main())
