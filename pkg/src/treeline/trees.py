"""Tree ingestion, canonical forms, and exhaustive enumeration.

Canonical form is the AHU encoding rooted at the tree's center (the
lexicographically smaller encoding when there are two centers), so two
trees are isomorphic exactly when their canonical byte strings match.
Enumeration is hybrid: brute Prufer decoding up to 8 vertices, and
leaf extension with canonical dedup beyond, which keeps the two
generators cross-checkable on the overlap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph import Graph

_PRUFER_LIMIT = 8
_ENUM_LIMIT = 14

# number of unlabeled trees on 1..10 vertices, used as a self-check
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)


class ParseError(ValueError):
    """Malformed tree input."""


@dataclass(frozen=True)
class CanonicalTree:
    """Isomorphism-class representative with a comparable encoding."""

    n: int
    form: bytes
    edges: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def tree_centers(G: Graph) -> list[int]:
    """The one or two middle vertices of a longest path (leaf stripping)."""
    if not G.is_tree():
        raise ValueError("centers are defined for trees")
    if G.n == 1:
        return [0]
    degree = [G.degree(v) for v in range(G.n)]
    layer = [v for v in range(G.n) if degree[v] == 1]
    remaining = G.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w in G.adj[v]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_encoding(G: Graph, root: int) -> tuple[str, list[int]]:
    """AHU string of the rooted tree plus a canonical vertex order.

    The order lists original ids by a depth-first walk that visits
    children by sorted subtree encoding, so isomorphic rooted trees get
    identical orders up to isomorphism.
    """
    def encode(v: int, parent: int) -> tuple[str, list[int]]:
        parts = sorted(
            (encode(w, v) for w in G.adj[v] if w != parent),
            key=lambda p: p[0],
        )
        order = [v]
        for _, sub in parts:
            order.extend(sub)
        return "(" + "".join(p[0] for p in parts) + ")", order

    return encode(root, -1)


def canonical_tree(G: Graph) -> CanonicalTree:
    """Canonical representative of the isomorphism class of a tree."""
    if not G.is_tree():
        raise ValueError("canonical form is defined for trees")
    best: tuple[str, list[int]] | None = None
    for c in tree_centers(G):
        cand = _rooted_encoding(G, c)
        if best is None or cand[0] < best[0]:
            best = cand
    assert best is not None
    form, order = best
    relabel = {v: i for i, v in enumerate(order)}
    edges = tuple(
        sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in G.edges())
    )
    return CanonicalTree(G.n, form.encode(), edges)


def prufer_decode(seq: Iterable[int], n: int | None = None) -> Graph:
    """Tree from a Prufer sequence of 0-based ids (standard algorithm)."""
    seq = list(seq)
    if n is None:
        n = len(seq) + 2
    if n != len(seq) + 2:
        raise ValueError("sequence length must be n - 2")
    if n < 2:
        raise ValueError("Prufer codes describe trees on >= 2 vertices")
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"id {x} out of range")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def prufer_encode(G: Graph) -> list[int]:
    """Prufer sequence (0-based) of a labeled tree."""
    if not G.is_tree():
        raise ValueError("Prufer encoding is defined for trees")
    if G.n < 2:
        raise ValueError("Prufer codes describe trees on >= 2 vertices")
    import heapq

    degree = [G.degree(v) for v in range(G.n)]
    adj = [set(s) for s in G.adj]
    leaves = [v for v in range(G.n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(G.n - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = adj[leaf]
        seq.append(parent)
        adj[parent].discard(leaf)
        degree[parent] -= 1
        if degree[parent] == 1:
            heapq.heappush(leaves, parent)
    return seq


# interning table for rooted subtree shapes; process-local, used only to
# deduplicate inside one enumeration sweep
_shape_ids: dict[tuple[int, ...], int] = {}


def _shape_key(n: int, adj: list[list[int]]) -> tuple[int, ...]:
    """Cheap isomorphism key: interned rooted-shape ids at the centers."""
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w in adj[v]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = layer

    def rooted(v: int, parent: int) -> int:
        key = tuple(sorted(rooted(w, v) for w in adj[v] if w != parent))
        sid = _shape_ids.get(key)
        if sid is None:
            sid = len(_shape_ids)
            _shape_ids[key] = sid
        return sid

    return tuple(sorted(rooted(c, -1) for c in centers))


def _trees_by_prufer(n: int) -> list[CanonicalTree]:
    from itertools import product

    found: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for seq in product(range(n), repeat=n - 2):
        # pointerless O(n) decode straight to adjacency lists
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        adj: list[list[int]] = [[] for _ in range(n)]
        edges = []
        ptr = 0
        leaf = -1
        for x in seq:
            if leaf < 0:
                while degree[ptr] != 1:
                    ptr += 1
                leaf = ptr
            edges.append((leaf, x))
            adj[leaf].append(x)
            adj[x].append(leaf)
            degree[leaf] -= 1
            degree[x] -= 1
            if degree[x] == 1 and x < ptr:
                leaf = x
            else:
                leaf = -1
        last = [v for v in range(n) if degree[v] == 1]
        edges.append((last[0], last[1]))
        adj[last[0]].append(last[1])
        adj[last[1]].append(last[0])
        found.setdefault(_shape_key(n, adj), edges)
    reps = [canonical_tree(Graph(n, edges)) for edges in found.values()]
    return sorted(reps, key=lambda t: t.form)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[CanonicalTree, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    if not 1 <= n <= _ENUM_LIMIT:
        raise ValueError(f"enumeration supports 1 <= n <= {_ENUM_LIMIT}, got {n}")
    if n == 1:
        return (canonical_tree(Graph(1, [])),)
    if n == 2:
        return (canonical_tree(Graph(2, [(0, 1)])),)
    if n <= _PRUFER_LIMIT:
        return tuple(_trees_by_prufer(n))
    found: dict[bytes, CanonicalTree] = {}
    for smaller in enumerate_trees(n - 1):
        for v in range(smaller.n):
            grown = Graph(n, smaller.edges + ((v, n - 1),))
            t = canonical_tree(grown)
            found.setdefault(t.form, t)
    return tuple(sorted(found.values(), key=lambda t: t.form))


# -- text formats ------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Tree from '#'-commented edge-list text with 1-based ids."""
    edges: list[tuple[int, int]] = []
    max_id = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer id in {raw!r}") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: ids must be positive, got {u} {v}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        max_id = max(max_id, u, v)
        edges.append((u - 1, v - 1))
    if not edges:
        raise ParseError("no edges found")
    G = Graph(max_id, edges)
    if not G.is_tree():
        raise ParseError("edges do not form a tree")
    return G


def parse_prufer(text: str) -> Graph:
    """Tree from a single line of 1-based Prufer ids."""
    tokens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    try:
        seq = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer Prufer entry in {tokens!r}") from None
    n = len(seq) + 2
    for x in seq:
        if not 1 <= x <= n:
            raise ParseError(f"Prufer id {x} out of range 1..{n}")
    return prufer_decode([x - 1 for x in seq], n)


def parse_tree(text: str, fmt: str) -> Graph:
    """Dispatch on format name: 'edgelist' or 'prufer'."""
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "prufer":
        return parse_prufer(text)
    raise ParseError(f"unknown format {fmt!r}")


def emit_edgelist(G: Graph) -> str:
    """Edge-list text with 1-based ids, one edge per line."""
    return "\n".join(f"{u + 1} {v + 1}" for u, v in G.edges()) + "\n"


def emit_prufer(G: Graph) -> str:
    """Single-line Prufer text with 1-based ids."""
    return " ".join(str(x + 1) for x in prufer_encode(G)) + "\n"
