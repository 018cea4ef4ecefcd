"""Exact combinatorial invariants at desk scale.

All searches are exponential but exact: maximum independent set and
maximal-set enumeration run on bitmask adjacency, induced matchings
reduce to an independent-set problem on an edge-conflict graph, and the
bouquet number runs over independent root sets with a matching-based
feasibility test.  Inputs beyond the stated caps are rejected rather
than silently approximated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

_MIS_CAP = 40
_INDMAT_EDGE_CAP = 40
_BOUQUET_CAP = 22


def _bit_iter(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mis_size(bits: tuple[int, ...], candidates: int, memo: dict[int, int]) -> int:
    if candidates == 0:
        return 0
    cached = memo.get(candidates)
    if cached is not None:
        return cached
    # branch on a vertex of maximum degree within the candidate set
    best_v = -1
    best_deg = -1
    for v in _bit_iter(candidates):
        d = (bits[v] & candidates).bit_count()
        if d > best_deg:
            best_deg = d
            best_v = v
    if best_deg == 0:
        result = candidates.bit_count()
    else:
        with_v = 1 + _mis_size(bits, candidates & ~(bits[best_v] | (1 << best_v)), memo)
        without_v = _mis_size(bits, candidates & ~(1 << best_v), memo)
        result = max(with_v, without_v)
    memo[candidates] = result
    return result


def max_independent_set_size(G: Graph) -> int:
    """Size of a largest edge-free vertex set (exact search)."""
    if G.n > _MIS_CAP:
        raise ValueError(f"exact search capped at {_MIS_CAP} vertices, got {G.n}")
    return _mis_size(G.bits, (1 << G.n) - 1, {})


def _bron_kerbosch(bits: tuple[int, ...], r: int, p: int, x: int,
                   out: list[int]) -> None:
    if p == 0 and x == 0:
        out.append(r)
        return
    # pivot with the most neighbors in P
    pivot = max(_bit_iter(p | x), key=lambda v: (bits[v] & p).bit_count())
    for v in _bit_iter(p & ~bits[pivot]):
        vb = 1 << v
        _bron_kerbosch(bits, r | vb, p & bits[v], x & bits[v], out)
        p &= ~vb
        x |= vb


def _maximal_clique_masks(G: Graph) -> list[int]:
    if G.n == 0:
        return []
    out: list[int] = []
    _bron_kerbosch(G.bits, 0, (1 << G.n) - 1, 0, out)
    return out


def maximal_cliques(G: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, each sorted, in sorted order."""
    return sorted(tuple(_bit_iter(m)) for m in _maximal_clique_masks(G))


def maximal_independent_sets(G: Graph) -> list[tuple[int, ...]]:
    """All maximal independent sets (maximal cliques of the complement)."""
    return maximal_cliques(G.complement())


def minimal_vertex_covers(G: Graph) -> list[tuple[int, ...]]:
    """All inclusion-minimal vertex covers.

    These are exactly the complements of maximal independent sets.
    """
    everything = set(range(G.n))
    return sorted(
        tuple(sorted(everything - set(s))) for s in maximal_independent_sets(G)
    )


def count_triangles(G: Graph) -> int:
    """Number of 3-cliques."""
    total = 0
    for u, v in G.edges():
        total += (G.bits[u] & G.bits[v]).bit_count()
    return total // 3


def count_matchings(G: Graph, k: int) -> int:
    """Number of k-element sets of pairwise disjoint edges (subset scan)."""
    from itertools import combinations

    count = 0
    for chosen in combinations(G.edges(), k):
        verts: set[int] = set()
        for u, v in chosen:
            verts.update((u, v))
        if len(verts) == 2 * k:
            count += 1
    return count


def edge_conflict_graph(G: Graph) -> Graph:
    """Graph on E(G): two edges conflict when they meet or are joined.

    Independent sets of this graph are exactly the induced matchings of G.
    """
    edges = G.edges()
    m = len(edges)
    conflicts = []
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if {a, b} & {c, d}:
                conflicts.append((i, j))
                continue
            if (
                c in G.adj[a] or d in G.adj[a]
                or c in G.adj[b] or d in G.adj[b]
            ):
                conflicts.append((i, j))
    return Graph(m, conflicts)


def induced_matching_number(G: Graph) -> int:
    """Largest number of pairwise disjoint, pairwise unjoined edges."""
    if G.num_edges > _INDMAT_EDGE_CAP:
        raise ValueError(
            f"exact search capped at {_INDMAT_EDGE_CAP} edges, got {G.num_edges}"
        )
    if G.num_edges == 0:
        return 0
    return max_independent_set_size(edge_conflict_graph(G))


# -- bouquets ----------------------------------------------------------------


@dataclass(frozen=True)
class Bouquet:
    """A star subgraph: a root with a nonempty flower set of neighbors."""

    root: int
    flowers: frozenset[int]


@dataclass(frozen=True)
class BouquetSet:
    """Bouquets with disjoint vertex sets and pairwise non-adjacent roots."""

    bouquets: tuple[Bouquet, ...]

    @property
    def flower_count(self) -> int:
        return sum(len(b.flowers) for b in self.bouquets)


def _independent_masks(bits: tuple[int, ...], n: int):
    """Yield every nonempty independent vertex set as a bitmask."""
    def rec(start: int, chosen: int, forbidden: int):
        for v in range(start, n):
            vb = 1 << v
            if forbidden & vb:
                continue
            yield chosen | vb
            yield from rec(v + 1, chosen | vb, forbidden | bits[v])
    yield from rec(0, 0, 0)


def _saturating_matching(roots: list[int], cand_of: dict[int, list[int]]) -> bool:
    """Can every root be matched to its own candidate flower (Kuhn)?"""
    match: dict[int, int] = {}

    def augment(r: int, seen: set[int]) -> bool:
        for c in cand_of[r]:
            if c in seen:
                continue
            seen.add(c)
            if c not in match or augment(match[c], seen):
                match[c] = r
                return True
        return False

    return all(augment(r, set()) for r in roots)


def bouquet_d_prime(G: Graph) -> int:
    """Maximum total flower count over semi-strongly disjoint bouquet sets.

    For a fixed independent root set R the best flower set is every vertex
    outside R adjacent to R, provided each root can keep one private
    flower; that feasibility is a bipartite matching condition.
    """
    best = _best_bouquet_set(G)
    return best.flower_count if best is not None else 0


def best_bouquet_set(G: Graph) -> BouquetSet | None:
    """A witness bouquet set achieving the maximum flower count."""
    return _best_bouquet_set(G)


def _best_bouquet_set(G: Graph) -> BouquetSet | None:
    if G.n > _BOUQUET_CAP:
        raise ValueError(f"exact search capped at {_BOUQUET_CAP} vertices, got {G.n}")
    best_mask = -1
    best_count = 0
    for rmask in _independent_masks(G.bits, G.n):
        cover = 0
        for v in _bit_iter(rmask):
            cover |= G.bits[v]
        cover &= ~rmask
        count = cover.bit_count()
        if count <= best_count:
            continue
        roots = list(_bit_iter(rmask))
        cand_of = {r: [c for c in _bit_iter(G.bits[r] & cover)] for r in roots}
        if any(not c for c in cand_of.values()):
            continue
        if _saturating_matching(roots, cand_of):
            best_count = count
            best_mask = rmask
    if best_mask < 0:
        return None
    # rebuild a concrete assignment: give each root one matched flower,
    # then attach every remaining flower to any adjacent root
    roots = list(_bit_iter(best_mask))
    cover = 0
    for v in roots:
        cover |= G.bits[v]
    cover &= ~best_mask
    owner: dict[int, int] = {}
    match: dict[int, int] = {}

    def augment(r: int, seen: set[int]) -> bool:
        for c in _bit_iter(G.bits[r] & cover):
            if c in seen:
                continue
            seen.add(c)
            if c not in match or augment(match[c], seen):
                match[c] = r
                return True
        return False

    for r in roots:
        augment(r, set())
    owner.update(match)
    for c in _bit_iter(cover):
        if c not in owner:
            owner[c] = next(r for r in roots if c in G.adj[r])
    bouquets = tuple(
        Bouquet(r, frozenset(c for c, rr in owner.items() if rr == r))
        for r in roots
    )
    return BouquetSet(bouquets)
