"""Deterministic generators for the graph families and products under study.

Labeling conventions (fixed so witness sets translate to concrete indices):

* path / cycle: vertices ``0..n-1`` in order.
* star ``S_{1,n}``: center 0, leaves ``1..n``.
* wheel ``W_{1,n}`` / fan ``F_{1,n}``: hub 0, rim (cycle or path) ``1..n``.
* complete bipartite ``K_{n,m}``: parts ``{0..n-1}`` and ``{n..n+m-1}``.
* grid2 ``P_n x P_2``: row u is ``0..n-1``, row v is ``n..2n-1``.
* prism2 ``C_n x P_2``: x-cycle ``0..n-1``, y-cycle ``n..2n-1``.
* cartesian(g, h): vertex (a, b) gets index ``a*|V(h)| + b``.
* corona(g, h): vertex i of g keeps index i; vertex j of the i-th copy of h
  gets ``p + i*q + j``.
* join(g, h): g keeps ``0..p-1``, h is shifted to ``p..p+q-1``.

Text form used by the CLI: ``path:9``, ``cycle:12``, ``kb:3,4``, ``wheel:6``,
``grid2:7``, ``prism2:10``, ``corona:path:3,path:2``,
``join:complete:1,cycle:5``, ``cartesian:path:4,cycle:3``,
``tree:0-1,1-2,1-3`` and ``randtree:10,7`` (n, seed). Product operands that
are themselves products go in parentheses.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graph_core import DEFAULT_MAX_VERTICES, Graph, GraphError, SizeCapError, from_edge_list


class FamilySpecError(GraphError):
    pass


# kind -> (parameter names, minimum values)
_SIMPLE = {
    "path": (("n",), (1,)),
    "cycle": (("n",), (3,)),
    "complete": (("n",), (1,)),
    "kb": (("n", "m"), (1, 1)),
    "star": (("n",), (1,)),
    "wheel": (("n",), (3,)),
    "fan": (("n",), (1,)),
    "grid2": (("n",), (1,)),
    "prism2": (("n",), (3,)),
    "randtree": (("n", "seed"), (1, 0)),
}
_PRODUCTS = ("cartesian", "corona", "join")

FAMILY_KINDS = tuple(_SIMPLE) + _PRODUCTS + ("tree",)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    operands: tuple["FamilySpec", ...] = ()
    tree_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind in _SIMPLE:
            names, mins = _SIMPLE[self.kind]
            if len(self.params) != len(names):
                raise FamilySpecError(f"{self.kind} takes {len(names)} parameter(s)")
            for name, lo, val in zip(names, mins, self.params):
                if val < lo:
                    raise FamilySpecError(f"{self.kind}: {name}={val} below minimum {lo}")
        elif self.kind in _PRODUCTS:
            if len(self.operands) != 2:
                raise FamilySpecError(f"{self.kind} takes two operands")
        elif self.kind == "tree":
            if not self.tree_edges and self.params != (1,):
                raise FamilySpecError("tree needs an edge list")
        else:
            raise FamilySpecError(f"unknown family {self.kind!r}")

    def __str__(self) -> str:
        if self.kind in _SIMPLE:
            return f"{self.kind}:" + ",".join(map(str, self.params))
        if self.kind in _PRODUCTS:
            parts = [f"({op})" if op.kind in _PRODUCTS else str(op) for op in self.operands]
            return f"{self.kind}:" + ",".join(parts)
        if not self.tree_edges:
            return "tree:"
        return "tree:" + ",".join(f"{u}-{v}" for u, v in self.tree_edges)


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    if depth != 0:
        raise FamilySpecError(f"unbalanced parentheses in {text!r}")
    return parts


def parse_family(text: str) -> FamilySpec:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return parse_family(text[1:-1])
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise FamilySpecError(f"family spec {text!r} needs 'kind:params'")
    if kind in _SIMPLE:
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError:
            raise FamilySpecError(f"bad integer parameters in {text!r}") from None
        return FamilySpec(kind, params)
    if kind in _PRODUCTS:
        # integer-only tokens belong to the preceding operand ("kb:3,4")
        operands: list[str] = []
        for tok in _split_top_level(rest):
            if tok.strip().isdigit() and operands:
                operands[-1] += "," + tok
            else:
                operands.append(tok)
        if len(operands) != 2:
            raise FamilySpecError(f"{kind} needs exactly two operands in {text!r}")
        return FamilySpec(kind, operands=tuple(parse_family(op) for op in operands))
    if kind == "tree":
        edges = []
        for tok in filter(None, (t.strip() for t in rest.split(","))):
            a, dash, b = tok.partition("-")
            if not dash or not a.isdigit() or not b.isdigit():
                raise FamilySpecError(f"bad tree edge {tok!r}")
            edges.append((int(a), int(b)))
        if not edges:
            return FamilySpec("tree", params=(1,))
        return FamilySpec("tree", tree_edges=tuple(edges))
    raise FamilySpecError(f"unknown family {kind!r}")


def _check_cap(n: int, max_vertices: int) -> None:
    if n > max_vertices:
        raise SizeCapError(f"{n} vertices exceeds the cap of {max_vertices}")


def path(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], max_vertices=max_vertices)


def cycle(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], max_vertices=max_vertices)


def complete(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2), max_vertices=max_vertices)


def complete_bipartite(n: int, m: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    return from_edge_list(n + m, [(i, n + j) for i in range(n) for j in range(m)], max_vertices=max_vertices)


def star(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)], max_vertices=max_vertices)


def wheel(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)] + rim, max_vertices=max_vertices)


def fan(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    rim = [(i, i + 1) for i in range(1, n)]
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)] + rim, max_vertices=max_vertices)


def grid2(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    pairs = [(i, i + 1) for i in range(n - 1)]
    pairs += [(n + i, n + i + 1) for i in range(n - 1)]
    pairs += [(i, n + i) for i in range(n)]
    return from_edge_list(2 * n, pairs, max_vertices=max_vertices)


def prism2(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    pairs = [(i, (i + 1) % n) for i in range(n)]
    pairs += [(n + i, n + (i + 1) % n) for i in range(n)]
    pairs += [(i, n + i) for i in range(n)]
    return from_edge_list(2 * n, pairs, max_vertices=max_vertices)


def cartesian_product(g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    g.require_connected()
    h.require_connected()
    q = h.n
    _check_cap(g.n * q, max_vertices)
    pairs = [(a * q + u, a * q + v) for a in range(g.n) for u, v in h.edges]
    pairs += [(a * q + b, c * q + b) for a, c in g.edges for b in range(q)]
    return from_edge_list(g.n * q, pairs, max_vertices=max_vertices)


def corona(g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    g.require_connected()
    p, q = g.n, h.n
    _check_cap(p + p * q, max_vertices)
    pairs = list(g.edges)
    for i in range(p):
        base = p + i * q
        pairs += [(base + u, base + v) for u, v in h.edges]
        pairs += [(i, base + j) for j in range(q)]
    return from_edge_list(p + p * q, pairs, max_vertices=max_vertices)


def join(g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    p, q = g.n, h.n
    _check_cap(p + q, max_vertices)
    pairs = list(g.edges) + [(p + u, p + v) for u, v in h.edges]
    pairs += [(i, p + j) for i in range(p) for j in range(q)]
    return from_edge_list(p + q, pairs, max_vertices=max_vertices)


def random_tree(n: int, seed: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Uniform random labeled tree on n vertices, decoded from a Pruefer sequence."""
    if n < 1:
        raise FamilySpecError("a tree needs at least one vertex")
    if n <= 2:
        return from_edge_list(n, [(0, 1)] if n == 2 else [], max_vertices=max_vertices)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    pairs = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    pairs.append((u, v))
    return from_edge_list(n, pairs, max_vertices=max_vertices)


def generate(spec: FamilySpec, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    k, p = spec.kind, spec.params
    if k in _PRODUCTS:
        g, h = (generate(op, max_vertices) for op in spec.operands)
        build = {"cartesian": cartesian_product, "corona": corona, "join": join}[k]
        return build(g, h, max_vertices=max_vertices)
    if k == "tree":
        if not spec.tree_edges:
            return from_edge_list(1, [])
        n = 1 + max(max(e) for e in spec.tree_edges)
        _check_cap(n, max_vertices)
        t = from_edge_list(n, spec.tree_edges, max_vertices=max_vertices)
        if t.m != n - 1 or not t.connected:
            raise FamilySpecError(f"{spec} is not a tree")
        return t
    sizes = {
        "path": p[0], "cycle": p[0], "complete": p[0], "kb": sum(p), "star": p[0] + 1,
        "wheel": p[0] + 1, "fan": p[0] + 1, "grid2": 2 * p[0], "prism2": 2 * p[0],
        "randtree": p[0],
    }
    _check_cap(sizes[k], max_vertices)
    if k == "kb":
        return complete_bipartite(*p, max_vertices=max_vertices)
    if k == "randtree":
        return random_tree(*p, max_vertices=max_vertices)
    return {
        "path": path, "cycle": cycle, "complete": complete, "star": star,
        "wheel": wheel, "fan": fan, "grid2": grid2, "prism2": prism2,
    }[k](p[0], max_vertices=max_vertices)


def is_isomorphic_bruteforce(g: Graph, h: Graph, max_n: int = 10) -> bool:
    """Permutation search; only meant for generator self-tests at tiny n."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    if g.n > max_n:
        raise SizeCapError(f"brute-force isomorphism limited to n <= {max_n}")
    target = set(h.edges)
    by_degree = [[v for v in range(h.n) if h.degree(v) == g.degree(u)] for u in range(g.n)]
    # backtracking over degree-compatible images
    image = [-1] * g.n
    used = [False] * h.n

    def extend(u: int) -> bool:
        if u == g.n:
            return all((min(image[a], image[b]), max(image[a], image[b])) in target for a, b in g.edges)
        for cand in by_degree[u]:
            if used[cand]:
                continue
            ok = all(
                ((min(image[w], cand), max(image[w], cand)) in target) == g.has_edge(u, w)
                for w in range(u)
            )
            if ok:
                image[u] = cand
                used[cand] = True
                if extend(u + 1):
                    return True
                used[cand] = False
        return False

    return extend(0)
