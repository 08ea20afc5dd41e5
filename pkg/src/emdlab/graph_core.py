"""Simple undirected graphs, hop distances and vertex-edge distances.

Vertices are dense indices ``0..n-1``. The edge list is canonical: every pair
is stored as ``(u, v)`` with ``u < v`` and the list is sorted, so the position
of an edge in ``Graph.edges`` is its stable identifier.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

DEFAULT_MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph input (loops, duplicates, bad indices, bad text)."""


class DisconnectedGraphError(GraphError):
    pass


class SizeCapError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False)
    connected: bool = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_index(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        # edges are sorted, so a bisect would do; m is tiny at desk scale
        try:
            return self.edges.index(key)
        except ValueError:
            raise GraphError(f"no edge {key}") from None

    def require_connected(self) -> None:
        if not self.connected:
            raise DisconnectedGraphError("operation needs a connected graph")


@dataclass(frozen=True)
class EdgeRef:
    index: int
    endpoints: tuple[int, int]


def edge_ref(g: Graph, index: int) -> EdgeRef:
    if not 0 <= index < g.m:
        raise IndexError(f"edge index {index} out of range for {g.m} edges")
    return EdgeRef(index, g.edges[index])


def _is_connected(n: int, adjacency: list[set[int]]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def from_edge_list(
    n: int,
    pairs: Iterable[tuple[int, int]],
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Graph:
    """Build a canonical graph; loops, duplicates and bad indices are errors."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    if n > max_vertices:
        raise SizeCapError(f"{n} vertices exceeds the cap of {max_vertices}")
    adjacency: list[set[int]] = [set() for _ in range(n)]
    canon = []
    for a, b in pairs:
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        if b in adjacency[a]:
            raise GraphError(f"duplicate edge ({min(a, b)}, {max(a, b)})")
        adjacency[a].add(b)
        adjacency[b].add(a)
        canon.append((min(a, b), max(a, b)))
    canon.sort()
    return Graph(
        n=n,
        edges=tuple(canon),
        adjacency=tuple(frozenset(s) for s in adjacency),
        connected=_is_connected(n, adjacency),
    )


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: np.ndarray = field(repr=False)

    def __getitem__(self, ij):
        return self.d[ij]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Hop distances by one BFS per source."""
    g.require_connected()
    d = np.zeros((g.n, g.n), dtype=np.uint8)
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        d[s] = dist
    d.setflags(write=False)
    return DistanceMatrix(g.n, d)


def vertex_edge_distance(dm: DistanceMatrix, w: int, e: EdgeRef) -> int:
    u, v = e.endpoints
    if not 0 <= w < dm.n:
        raise IndexError(f"vertex {w} out of range")
    return int(min(dm.d[w, u], dm.d[w, v]))


def vertex_edge_table(g: Graph, dm: DistanceMatrix) -> np.ndarray:
    """Array ``t[w, i] = d(w, edges[i])`` of shape (n, m)."""
    if g.m == 0:
        return np.zeros((g.n, 0), dtype=np.uint8)
    ends = np.asarray(g.edges)
    t = np.minimum(dm.d[:, ends[:, 0]], dm.d[:, ends[:, 1]])
    t.setflags(write=False)
    return t


def diameter(dm: DistanceMatrix) -> int:
    return int(dm.d.max())
