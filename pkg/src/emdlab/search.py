"""Ascending-cardinality search for a minimum set satisfying a monotone predicate.

Every parameter in this package (metric dimension, edge metric dimension,
domination numbers and the two combined dimensions) is the minimum size of a
vertex set satisfying a predicate that is preserved under supersets. If no set
of size k works then no smaller set works either, so scanning k upward and
stopping at the first hit gives the exact minimum. Within one k, sets are
visited in lexicographic order of sorted index tuples, which makes the first
hit the canonical witness.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Sequence

DEFAULT_BUDGET = 60.0
_CLOCK_EVERY = 256


class SearchError(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when the time budget runs out; carries the proven lower bound."""

    def __init__(self, lower_bound: int, examined: int, budget: float):
        super().__init__(
            f"time budget of {budget:g}s exceeded after {examined} sets; "
            f"value is at least {lower_bound}"
        )
        self.lower_bound = lower_bound
        self.examined = examined
        self.budget = budget


@dataclass(frozen=True)
class ParamResult:
    value: int
    witness: tuple[int, ...]
    method: str = "exact-search"
    examined: int = 0
    elapsed: float = 0.0


def minimal_monotone_set(
    n: int,
    predicate: Callable[[tuple[int, ...]], bool],
    lower_bound: int = 1,
    budget: float | None = DEFAULT_BUDGET,
) -> ParamResult:
    if not 1 <= lower_bound <= n:
        raise ValueError(f"lower_bound must lie in 1..{n}, got {lower_bound}")
    start = time.perf_counter()
    deadline = None if budget is None else start + budget
    examined = 0
    for k in range(lower_bound, n + 1):
        for subset in itertools.combinations(range(n), k):
            examined += 1
            if deadline is not None and examined % _CLOCK_EVERY == 0 and time.perf_counter() > deadline:
                raise BudgetExceeded(k, examined, budget)
            if predicate(subset):
                return ParamResult(k, subset, "exact-search", examined, time.perf_counter() - start)
    raise SearchError("predicate is false on the full vertex set; it cannot be monotone")


def earlier_witness(
    predicate: Callable[[tuple[int, ...]], bool], witness: Sequence[int], n: int
) -> tuple[int, ...] | None:
    """Return a lexicographically earlier same-size set that satisfies the predicate, if any.

    Used to re-verify canonical witnesses; ``None`` means the witness is the first.
    """
    witness = tuple(witness)
    for subset in itertools.combinations(range(n), len(witness)):
        if subset == witness:
            return None
        if predicate(subset):
            return subset
    raise ValueError("witness is not a sorted subset of range(n)")
