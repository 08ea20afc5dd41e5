"""Vertex and edge codes, resolving predicates, and exact metric / edge metric dimension.

Codes are compared over all vertices (all edges), landmarks included. A
landmark is the only vertex with a 0 in its own coordinate, so this agrees with
the usual "every vertex outside the set" formulation. Landmark sets are never
empty, which is what makes a single edge have edge metric dimension 1.
"""
from __future__ import annotations

from typing import Callable, Iterable

from .graph_core import DistanceMatrix, EdgeRef, Graph, all_pairs_distances, edge_ref, vertex_edge_table
from .search import DEFAULT_BUDGET, ParamResult, minimal_monotone_set


def landmark_set(n: int, vertices: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a sorted, duplicate-free, nonempty tuple of valid indices."""
    verts = tuple(sorted(set(int(v) for v in vertices)))
    if not verts:
        raise ValueError("landmark sets must be nonempty")
    if verts[0] < 0 or verts[-1] >= n:
        raise ValueError(f"landmark outside 0..{n - 1}: {verts}")
    return verts


def _ordered(n: int, landmarks: Iterable[int]) -> tuple[int, ...]:
    # codes follow the caller's landmark order; membership rules are as for landmark_set
    verts = tuple(int(v) for v in landmarks)
    if landmark_set(n, verts) and len(set(verts)) != len(verts):
        raise ValueError(f"repeated landmark in {verts}")
    return verts


def vertex_code(dm: DistanceMatrix, y: int, landmarks: Iterable[int]) -> tuple[int, ...]:
    """Distances from y to each landmark, in the order the landmarks are given."""
    return tuple(int(dm.d[y, x]) for x in _ordered(dm.n, landmarks))


def edge_code(g: Graph, dm: DistanceMatrix, e: EdgeRef | int, landmarks: Iterable[int]) -> tuple[int, ...]:
    if isinstance(e, int):
        e = edge_ref(g, e)
    u, v = e.endpoints
    return tuple(int(min(dm.d[x, u], dm.d[x, v])) for x in _ordered(g.n, landmarks))


def resolving_predicate(g: Graph, dm: DistanceMatrix) -> Callable[[tuple[int, ...]], bool]:
    # column w holds d(w, y) for every vertex y; codes are rows of the chosen columns
    cols = [tuple(int(x) for x in dm.d[w]) for w in range(g.n)]
    n = g.n

    def predicate(subset: tuple[int, ...]) -> bool:
        return len(set(zip(*(cols[w] for w in subset)))) == n

    return predicate


def edge_resolving_predicate(g: Graph, dm: DistanceMatrix) -> Callable[[tuple[int, ...]], bool]:
    table = vertex_edge_table(g, dm)
    cols = [tuple(int(x) for x in table[w]) for w in range(g.n)]
    m = g.m

    def predicate(subset: tuple[int, ...]) -> bool:
        return len(set(zip(*(cols[w] for w in subset)))) == m

    return predicate


def is_resolving(g: Graph, landmarks: Iterable[int], dm: DistanceMatrix | None = None) -> bool:
    """True when all n vertex codes are pairwise distinct."""
    if dm is None:
        dm = all_pairs_distances(g)
    return resolving_predicate(g, dm)(landmark_set(g.n, landmarks))


def is_edge_resolving(g: Graph, landmarks: Iterable[int], dm: DistanceMatrix | None = None) -> bool:
    if g.m == 0:
        raise ValueError("edge resolvability needs at least one edge")
    if dm is None:
        dm = all_pairs_distances(g)
    return edge_resolving_predicate(g, dm)(landmark_set(g.n, landmarks))


def metric_dimension(
    g: Graph,
    dm: DistanceMatrix | None = None,
    lower_bound: int = 1,
    budget: float | None = DEFAULT_BUDGET,
) -> ParamResult:
    if g.n < 2:
        raise ValueError("metric dimension needs at least two vertices")
    if dm is None:
        dm = all_pairs_distances(g)
    return minimal_monotone_set(g.n, resolving_predicate(g, dm), lower_bound, budget)


def edge_metric_dimension(
    g: Graph,
    dm: DistanceMatrix | None = None,
    lower_bound: int = 1,
    budget: float | None = DEFAULT_BUDGET,
) -> ParamResult:
    if g.m == 0:
        raise ValueError("edge metric dimension needs at least one edge")
    if dm is None:
        dm = all_pairs_distances(g)
    return minimal_monotone_set(g.n, edge_resolving_predicate(g, dm), lower_bound, budget)


def find_twins(g: Graph) -> list[tuple[int, int, str]]:
    """Unordered twin pairs ``(u, v, kind)`` with kind ``true-twin`` or ``false-twin``.

    True twins are adjacent (equal closed neighborhoods), false twins are not
    (equal open neighborhoods), so the two kinds never overlap.
    """
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                if g.closed_neighborhood(u) == g.closed_neighborhood(v):
                    out.append((u, v, "true-twin"))
            elif g.adjacency[u] == g.adjacency[v]:
                out.append((u, v, "false-twin"))
    return out
