"""Combined parameters: dominant metric dimension and the ve-dominant edge metric dimension.

A set is *dominant resolving* when it dominates every vertex and resolves every
vertex; gamma_md is the minimum size. A set is *ve-dominant edge resolving*
when it ve-dominates every edge and gives every edge a distinct code; gamma_emd
is the minimum size. Both conjunctions of monotone predicates are monotone,
so the shared ascending search applies, and the larger of the two component
minima is a valid starting cardinality.
"""
from __future__ import annotations

import time
from typing import Iterable

from .domination import (
    dominating_predicate,
    domination_number,
    ve_dominating_predicate,
    ve_domination_number,
)
from .graph_core import DistanceMatrix, Graph, all_pairs_distances
from .resolvability import (
    edge_metric_dimension,
    edge_resolving_predicate,
    landmark_set,
    metric_dimension,
    resolving_predicate,
)
from .search import DEFAULT_BUDGET, BudgetExceeded, ParamResult, minimal_monotone_set

PARAMETERS = ("beta", "beta_e", "gamma", "gamma_ve", "gamma_md", "gamma_emd")


def dominant_resolving_predicate(g: Graph, dm: DistanceMatrix):
    dom, res = dominating_predicate(g), resolving_predicate(g, dm)
    return lambda s: dom(s) and res(s)


def ve_dominant_edge_resolving_predicate(g: Graph, dm: DistanceMatrix):
    dom, res = ve_dominating_predicate(g, dm), edge_resolving_predicate(g, dm)
    return lambda s: dom(s) and res(s)


def is_dominant_resolving(g: Graph, vertices: Iterable[int], dm: DistanceMatrix | None = None) -> bool:
    if dm is None:
        dm = all_pairs_distances(g)
    return dominant_resolving_predicate(g, dm)(landmark_set(g.n, vertices))


def is_ve_dominant_edge_resolving(g: Graph, vertices: Iterable[int], dm: DistanceMatrix | None = None) -> bool:
    if g.m == 0:
        raise ValueError("needs at least one edge")
    if dm is None:
        dm = all_pairs_distances(g)
    return ve_dominant_edge_resolving_predicate(g, dm)(landmark_set(g.n, vertices))


class _Clock:
    """One deadline shared by a chain of searches."""

    def __init__(self, budget: float | None):
        self.budget = budget
        self.deadline = None if budget is None else time.perf_counter() + budget

    def remaining(self) -> float | None:
        if self.deadline is None:
            return None
        return max(self.deadline - time.perf_counter(), 0.0)


def dominant_metric_dimension(
    g: Graph,
    dm: DistanceMatrix | None = None,
    lower_bound: int | None = None,
    budget: float | None = DEFAULT_BUDGET,
) -> ParamResult:
    """Exact gamma_md; pass ``max(gamma, beta)`` as lower_bound when already known."""
    g.require_connected()
    if g.n < 2:
        raise ValueError("dominant metric dimension needs at least two vertices")
    if dm is None:
        dm = all_pairs_distances(g)
    return minimal_monotone_set(g.n, dominant_resolving_predicate(g, dm), lower_bound or 1, budget)


def ve_dominant_edge_metric_dimension(
    g: Graph,
    dm: DistanceMatrix | None = None,
    lower_bound: int | None = None,
    budget: float | None = DEFAULT_BUDGET,
) -> ParamResult:
    """Exact gamma_emd.

    Without an explicit lower_bound, gamma_ve and beta_e are computed first and
    the search starts at their maximum. All three searches share ``budget``.
    """
    g.require_connected()
    if g.m == 0:
        raise ValueError("needs at least one edge")
    if dm is None:
        dm = all_pairs_distances(g)
    clock = _Clock(budget)
    if lower_bound is None:
        gve = ve_domination_number(g, dm, budget=clock.remaining())
        be = edge_metric_dimension(g, dm, lower_bound=1, budget=clock.remaining())
        lower_bound = max(gve.value, be.value)
    try:
        return minimal_monotone_set(
            g.n, ve_dominant_edge_resolving_predicate(g, dm), lower_bound, clock.remaining()
        )
    except BudgetExceeded as exc:
        raise BudgetExceeded(exc.lower_bound, exc.examined, budget) from None


def compute_parameters(
    g: Graph,
    names: Iterable[str] = PARAMETERS,
    budget: float | None = DEFAULT_BUDGET,
) -> dict[str, ParamResult]:
    """Exact values for the requested parameters, reusing component minima as bounds.

    Results come back in the canonical order of PARAMETERS. Parameters that
    need edges are skipped on edgeless graphs.
    """
    wanted = set(names)
    unknown = wanted - set(PARAMETERS)
    if unknown:
        raise ValueError(f"unknown parameters: {sorted(unknown)}")
    g.require_connected()
    dm = all_pairs_distances(g)
    clock = _Clock(budget)
    need = set(wanted)
    if "gamma_md" in need:
        need |= {"gamma", "beta"}
    if "gamma_emd" in need:
        need |= {"gamma_ve", "beta_e"}
    if g.m == 0:
        need -= {"beta_e", "gamma_ve", "gamma_emd", "beta", "gamma_md"}
    out: dict[str, ParamResult] = {}
    if "beta" in need:
        out["beta"] = metric_dimension(g, dm, budget=clock.remaining())
    if "beta_e" in need:
        out["beta_e"] = edge_metric_dimension(g, dm, budget=clock.remaining())
    if "gamma" in need:
        out["gamma"] = domination_number(g, budget=clock.remaining())
    if "gamma_ve" in need:
        out["gamma_ve"] = ve_domination_number(g, dm, budget=clock.remaining())
    if "gamma_md" in need:
        lb = max(out["gamma"].value, out["beta"].value)
        out["gamma_md"] = dominant_metric_dimension(g, dm, lb, budget=clock.remaining())
    if "gamma_emd" in need:
        lb = max(out["gamma_ve"].value, out["beta_e"].value)
        out["gamma_emd"] = ve_dominant_edge_metric_dimension(g, dm, lb, budget=clock.remaining())
    return {k: out[k] for k in PARAMETERS if k in wanted and k in out}
