"""Print gamma_md against gamma_emd for the standard families, with witnesses.

Each row shows both exact values, the relation between them, the relation the
family is claimed to satisfy, and whether the two agree.
Usage: python3 scripts/reproduce_comparison.py [--workers 4]
"""
import argparse

from emdlab.families import parse_family
from emdlab.verify import DEFAULT_COMPARISON, comparison_table, expected_relation


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    rows = comparison_table(DEFAULT_COMPARISON, workers=args.workers)
    print(f"{'family':12} {'g_md':>5} {'g_emd':>6}  rel  claim  ok   md witness / emd witness")
    for r in rows:
        claim = expected_relation(parse_family(r.family)) or "-"
        ok = "-" if claim == "-" else ("yes" if r.relation == claim or (claim == ">=" and r.relation in "=>") else "NO")
        print(f"{r.family:12} {r.gamma_md:>5} {r.gamma_emd:>6}  {r.relation:^3}  {claim:^5}  {ok:3}  "
              f"{list(r.md_witness)} / {list(r.emd_witness)}")


if __name__ == "__main__":
    main()
