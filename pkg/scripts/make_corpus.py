"""Write newline-delimited graph6 corpora of all connected graphs up to a given order.

Graphs come from the networkx graph atlas (every graph on at most 7 vertices,
one per isomorphism class), so the corpus is generated outside the package's
own code. Usage: python3 scripts/make_corpus.py [--max-n 6] [--out PATH]
"""
import argparse
from pathlib import Path

import networkx as nx

from emdlab.formats import emit_graph6
from emdlab.graph_core import from_edge_list


def connected_graphs(min_n, max_n):
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(h):
            yield from_edge_list(n, h.edges())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    if args.max_n > 7:
        ap.error("the atlas stops at 7 vertices")
    out = args.out or Path(__file__).resolve().parents[1] / "src/emdlab/data" / f"corpus-n{args.max_n}.g6"
    lines = [emit_graph6(g) for g in connected_graphs(args.min_n, args.max_n)]
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main()
