"""Chordality, gaps, and induced-cycle search.

Chordality is decided by maximum-cardinality search followed by an
explicit perfect-elimination check, so a True answer is self-certifying.
Everything else is exact brute force sized for the small graphs this
package verifies.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

# A gap is a pair of disjoint edges with no edge of the graph joining
# them; equivalently an induced C4 of the complement.
GapPair = tuple[tuple[int, int], tuple[int, int]]


def _mcs_order(G: Graph) -> list[int]:
    """Maximum-cardinality search order (last-eliminated first)."""
    weight = [0] * G.n
    order: list[int] = []
    remaining = set(range(G.n))
    while remaining:
        v = max(sorted(remaining), key=lambda x: weight[x])
        order.append(v)
        remaining.discard(v)
        for w in G.adj[v]:
            if w in remaining:
                weight[w] += 1
    return order


def is_chordal(G: Graph) -> bool:
    """No induced cycle of length > 3 (perfect elimination ordering exists)."""
    if G.n <= 2:
        return True
    order = _mcs_order(G)
    # reverse of MCS order is a candidate elimination ordering
    elim = order[::-1]
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [w for w in G.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        for w in later:
            if w != u and w not in G.adj[u]:
                return False
    return True


def is_co_chordal(G: Graph) -> bool:
    """Whether the complement is chordal."""
    return is_chordal(G.complement())


def find_gaps(G: Graph) -> list[GapPair]:
    """All unordered pairs of disjoint edges with no joining edge, sorted."""
    edges = G.edges()
    gaps: list[GapPair] = []
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) != 4:
            continue
        if (
            c in G.adj[a] or d in G.adj[a]
            or c in G.adj[b] or d in G.adj[b]
        ):
            continue
        gaps.append(((a, b), (c, d)))
    return gaps


def is_gap_free(G: Graph) -> bool:
    return not find_gaps(G)


def count_induced_cycles(G: Graph, k: int) -> int:
    """Number of k-vertex subsets inducing the cycle C_k.

    A subset induces C_k iff the induced subgraph is connected with every
    degree equal to two.  Exponential in |V|; intended for small graphs.
    """
    if k < 3:
        raise ValueError(f"cycles have length >= 3, got {k}")
    if k > G.n:
        return 0
    count = 0
    for W in combinations(range(G.n), k):
        wset = set(W)
        degs = [len(G.adj[v] & wset) for v in W]
        if any(d != 2 for d in degs):
            continue
        H, _ = G.induced(W)
        if H.is_connected():
            count += 1
    return count


def is_weakly_chordal(G: Graph) -> bool:
    """Neither G nor its complement has an induced cycle of length >= 5."""
    H = G.complement()
    for k in range(5, G.n + 1):
        if count_induced_cycles(G, k) or count_induced_cycles(H, k):
            return False
    return True
