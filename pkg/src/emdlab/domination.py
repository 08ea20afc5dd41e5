"""Dominating and vertex-edge dominating sets, exact domination numbers.

A vertex w ve-dominates the edge xy when d(w, xy) <= 1, i.e. w is an
endpoint of xy or adjacent to one. Both predicates are evaluated with bitmasks:
vertex w contributes the mask of everything it covers, and a set works when
the union of its masks is full.
"""
from __future__ import annotations

from typing import Callable, Iterable

from .graph_core import DistanceMatrix, Graph, all_pairs_distances, vertex_edge_table
from .resolvability import landmark_set
from .search import DEFAULT_BUDGET, ParamResult, minimal_monotone_set


def _cover_predicate(masks: list[int], full: int) -> Callable[[tuple[int, ...]], bool]:
    def predicate(subset: tuple[int, ...]) -> bool:
        acc = 0
        for w in subset:
            acc |= masks[w]
        return acc == full

    return predicate


def dominating_predicate(g: Graph) -> Callable[[tuple[int, ...]], bool]:
    masks = [sum(1 << u for u in g.closed_neighborhood(w)) for w in range(g.n)]
    return _cover_predicate(masks, (1 << g.n) - 1)


def ve_coverage_masks(g: Graph, dm: DistanceMatrix | None = None) -> list[int]:
    """Bitmask over edge indices of the edges each vertex ve-dominates."""
    if dm is None and g.connected:
        dm = all_pairs_distances(g)
    if dm is not None:
        table = vertex_edge_table(g, dm)
        return [sum(1 << i for i in range(g.m) if table[w, i] <= 1) for w in range(g.n)]
    # disconnected input: distance <= 1 to an edge means an endpoint lies in N[w]
    masks = []
    for w in range(g.n):
        near = g.closed_neighborhood(w)
        masks.append(sum(1 << i for i, (x, y) in enumerate(g.edges) if x in near or y in near))
    return masks


def ve_dominating_predicate(g: Graph, dm: DistanceMatrix | None = None) -> Callable[[tuple[int, ...]], bool]:
    return _cover_predicate(ve_coverage_masks(g, dm), (1 << g.m) - 1)


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    return dominating_predicate(g)(landmark_set(g.n, vertices))


def is_ve_dominating(g: Graph, vertices: Iterable[int], dm: DistanceMatrix | None = None) -> bool:
    if g.m == 0:
        raise ValueError("ve-domination needs at least one edge")
    return ve_dominating_predicate(g, dm)(landmark_set(g.n, vertices))


def domination_number(g: Graph, lower_bound: int = 1, budget: float | None = DEFAULT_BUDGET) -> ParamResult:
    return minimal_monotone_set(g.n, dominating_predicate(g), lower_bound, budget)


def ve_domination_number(
    g: Graph,
    dm: DistanceMatrix | None = None,
    lower_bound: int = 1,
    budget: float | None = DEFAULT_BUDGET,
) -> ParamResult:
    if g.m == 0:
        raise ValueError("ve-domination number needs at least one edge")
    return minimal_monotone_set(g.n, ve_dominating_predicate(g, dm), lower_bound, budget)
