"""Immutable finite simple graphs over dense 0-based vertex ids.

Vertices are the integers 0..n-1.  Neighbor sets are frozensets and every
graph also carries per-vertex bitmask adjacency for the exponential
searches downstream.  All operations are pure; graphs never mutate after
construction.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

INF = math.inf


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph:
    """Simple undirected graph with frozen adjacency."""

    __slots__ = ("n", "adj", "bits", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        neigh: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            neigh[u].add(v)
            neigh[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in neigh)
        self.bits: tuple[int, ...] = tuple(
            sum(1 << w for w in s) for s in self.adj
        )
        self._edges: tuple[tuple[int, int], ...] = tuple(
            sorted((u, v) for u in range(n) for v in self.adj[u] if u < v)
        )
        self._hash = hash((n, self._edges))

    # -- elementary queries ------------------------------------------------

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted (u, v) pairs with u < v."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        """Number of neighbors of v."""
        self._check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def distance(self, u: int, v: int) -> int | float:
        """Shortest-path length between u and v; INF when disconnected."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == v:
                        return dist[y]
                    queue.append(y)
        return INF

    def diameter(self) -> int | float:
        """Maximum pairwise distance; INF when disconnected."""
        if self.n == 0:
            raise GraphError("diameter of the empty graph is undefined")
        best: int | float = 0
        for u in range(self.n):
            dist = self._bfs(u)
            if len(dist) < self.n:
                return INF
            best = max(best, max(dist.values()))
        return best

    def complement(self) -> "Graph":
        """Graph on the same vertices with exactly the non-edges."""
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self.adj[u]
        ]
        return Graph(self.n, edges)

    def induced(self, W: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on W, relabeled 0..|W|-1.

        Returns (H, labels) where labels[i] is the original id of the
        i-th vertex of H; labels are in increasing order.
        """
        labels = tuple(sorted(set(W)))
        for v in labels:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(labels)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(labels), edges), labels

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(self._bfs(0)) == self.n

    def is_tree(self) -> bool:
        """Connected and |E| = n - 1."""
        return self.is_connected() and self.num_edges == self.n - 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex permutation v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel requires a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self._edges])

    # -- helpers -----------------------------------------------------------

    def _bfs(self, source: int) -> dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph, rejecting self-loops and out-of-range ids."""
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with a center (vertex 0) and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
