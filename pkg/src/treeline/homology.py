"""Simplicial complexes and exact reduced homology over the rationals.

Betti numbers come from exact integer ranks of the boundary matrices
(via the rank kernel), so no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph
from .invariants import maximal_independent_sets
from .kernel import matrix_rank


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex given by its facets (maximal faces)."""

    n: int
    facets: tuple[frozenset[int], ...]

    def faces_by_dim(self) -> list[list[tuple[int, ...]]]:
        """All faces grouped by dimension: index d holds the d-faces, sorted.

        The empty face is implicit and not listed.
        """
        seen: set[tuple[int, ...]] = set()
        for facet in self.facets:
            base = sorted(facet)
            for k in range(1, len(base) + 1):
                seen.update(combinations(base, k))
        top = max((len(f) for f in seen), default=0)
        grouped: list[list[tuple[int, ...]]] = [[] for _ in range(top)]
        for face in seen:
            grouped[len(face) - 1].append(face)
        for bucket in grouped:
            bucket.sort()
        return grouped


def independence_complex(G: Graph) -> SimplicialComplex:
    """Complex whose faces are the independent sets of G."""
    if G.n == 0:
        return SimplicialComplex(0, (frozenset(),))
    facets = tuple(frozenset(s) for s in maximal_independent_sets(G))
    return SimplicialComplex(G.n, facets)


def _boundary_rank(lower: Sequence[tuple[int, ...]],
                   upper: Sequence[tuple[int, ...]]) -> int:
    """Rank of the boundary map from the upper faces to the lower ones."""
    if not lower or not upper:
        return 0
    index = {face: i for i, face in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, face in enumerate(upper):
        for t in range(len(face)):
            sub = face[:t] + face[t + 1:]
            rows[index[sub]][j] = 1 if t % 2 == 0 else -1
    return matrix_rank(rows)


def homology_from_faces(grouped: Sequence[Sequence[tuple[int, ...]]]) -> list[int]:
    """Reduced Betti numbers of a complex given its faces by dimension.

    Returns ranks indexed from dimension -1, i.e. result[d + 1] is the
    rank of the d-th reduced homology group.
    """
    if not grouped or not grouped[0]:
        # the complex {Ø}: a single reduced class in dimension -1
        return [1]
    top = len(grouped) - 1
    # rank of the boundary below each dimension; dimension 0 maps onto
    # the empty face with every coefficient 1, so its rank is 1
    ranks = [0] * (top + 2)
    ranks[0] = 1
    for d in range(1, top + 1):
        ranks[d] = _boundary_rank(grouped[d - 1], grouped[d])
    out = [0]  # dimension -1 vanishes once there is a vertex
    for d in range(top + 1):
        out.append(len(grouped[d]) - ranks[d] - ranks[d + 1])
    return out


def reduced_homology_ranks(K: SimplicialComplex) -> list[int]:
    """Reduced rational Betti numbers indexed from dimension -1."""
    return homology_from_faces(K.faces_by_dim())
