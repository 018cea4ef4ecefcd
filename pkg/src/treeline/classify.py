"""Decision procedures: which trees give line graphs with linear-resolution
edge ideals, and the caterpillar invariant formulas.

The classifier returns the most specific matching shape; every shape
other than NotLinear is a partially whiskered star, and membership in
the list is equivalent to co-chordality of the line graph, which the
harness checks exhaustively against the homological oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError


class TreeShape(enum.Enum):
    STAR = "Star"
    BROOM_DIAMETER_3 = "BroomDiameter3"
    PARTIALLY_WHISKERED_STAR = "PartiallyWhiskeredStar"
    PATH_AT_MOST_5 = "PathAtMost5"
    NOT_LINEAR = "NotLinear"


@dataclass(frozen=True)
class TreeClass:
    tag: TreeShape
    witness: tuple[int, ...] | None = None


def _require_tree(T: Graph) -> None:
    if not T.is_tree():
        raise GraphError("classification is defined for trees only")


def _star_center(T: Graph) -> int | None:
    """Vertex adjacent to all others, if any (n >= 2)."""
    if T.n < 2:
        return None
    for v in range(T.n):
        if T.degree(v) == T.n - 1:
            return v
    return None


def _path_order(T: Graph) -> tuple[int, ...] | None:
    """Vertex order of T as a path, or None; endpoints chosen by smaller id."""
    if T.n == 1:
        return (0,)
    ends = [v for v in range(T.n) if T.degree(v) == 1]
    if len(ends) != 2 or any(T.degree(v) > 2 for v in range(T.n)):
        return None
    if not T.is_connected():
        return None
    order = [min(ends)]
    prev = -1
    while len(order) < T.n:
        (nxt,) = [w for w in T.adj[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt)
    return tuple(order)


def is_partially_whiskered_star(T: Graph) -> tuple[bool, int | None]:
    """Star with at most one pendant edge added per vertex, plus a center.

    Equivalent test: some vertex c sees the whole tree within distance
    two and every neighbor of c has degree at most two.
    """
    _require_tree(T)
    if T.n == 1:
        return False, None
    for c in range(T.n):
        if any(T.degree(w) > 2 for w in T.adj[c]):
            continue
        reach = {c} | set(T.adj[c])
        for w in T.adj[c]:
            reach |= T.adj[w]
        if len(reach) == T.n:
            return True, c
    return False, None


def _broom_diameter_3(T: Graph) -> tuple[int, ...] | None:
    """Double star whose smaller side has exactly one leaf.

    Equivalently a path with extra leaves on one end vertex, subject to
    the diameter being exactly three.
    """
    if T.diameter() != 3:
        return None
    centers = [v for v in range(T.n) if T.degree(v) >= 2]
    if len(centers) != 2:
        return None
    u, v = centers
    leaves_u = T.degree(u) - 1
    leaves_v = T.degree(v) - 1
    if min(leaves_u, leaves_v) == 1:
        big, small = (u, v) if leaves_u >= leaves_v else (v, u)
        return (big, small)
    return None


def classify_tree(T: Graph) -> TreeClass:
    """Most specific shape whose line-graph ideal has a linear resolution."""
    _require_tree(T)
    center = _star_center(T)
    if center is not None:
        return TreeClass(TreeShape.STAR, (center,))
    path = _path_order(T)
    if path is not None and 2 <= T.n <= 5:
        return TreeClass(TreeShape.PATH_AT_MOST_5, path)
    broom = _broom_diameter_3(T)
    if broom is not None:
        return TreeClass(TreeShape.BROOM_DIAMETER_3, broom)
    pws, c = is_partially_whiskered_star(T)
    if pws:
        return TreeClass(TreeShape.PARTIALLY_WHISKERED_STAR, (c,))
    return TreeClass(TreeShape.NOT_LINEAR)


# -- caterpillars ------------------------------------------------------------


@dataclass(frozen=True)
class CaterpillarProfile:
    """Backbone data of a caterpillar: cutpoints in path order plus degrees."""

    backbone: tuple[int, ...]
    cutpoints: tuple[int, ...]
    n: int
    r: int
    degrees: tuple[int, ...]
    leaf_counts: tuple[int, ...]


def is_caterpillar(T: Graph) -> bool:
    """Removing all leaves must yield a (possibly empty) chordless path."""
    _require_tree(T)
    spine = [v for v in range(T.n) if T.degree(v) >= 2]
    if not spine:
        return True
    H, _ = T.induced(spine)
    return _path_order(H) is not None


def caterpillar_profile(T: Graph) -> CaterpillarProfile:
    """Backbone/cutpoint profile; refuses non-caterpillars.

    For a caterpillar the backbone vertices are exactly the cutpoints of
    the tree, which the construction asserts.
    """
    _require_tree(T)
    spine = [v for v in range(T.n) if T.degree(v) >= 2]
    if not spine:
        return CaterpillarProfile((), (), T.n, 0, (), ())
    H, labels = T.induced(spine)
    order = _path_order(H)
    if order is None:
        raise GraphError("not a caterpillar: non-leaf vertices are not a path")
    backbone = tuple(labels[i] for i in order)
    for v in backbone:
        assert T.degree(v) >= 2
    degrees = tuple(T.degree(v) for v in backbone)
    leaf_counts = tuple(
        sum(1 for w in T.adj[v] if T.degree(w) == 1) for v in backbone
    )
    return CaterpillarProfile(
        backbone, backbone, T.n, len(backbone), degrees, leaf_counts
    )


def caterpillar_pd(T: Graph) -> int:
    """Projective dimension formula: n - 1 - floor((r + 1) / 2)."""
    profile = caterpillar_profile(T)
    return profile.n - 1 - (profile.r + 1) // 2


def caterpillar_depth(T: Graph) -> int:
    """Depth formula: floor((r + 1) / 2)."""
    return (caterpillar_profile(T).r + 1) // 2


def caterpillar_regularity(T: Graph) -> int:
    """Cutpoint count, claimed to equal the line-graph regularity.

    Only defined under the stated degree bound (every vertex of degree
    one or at most four); the harness records where the claim actually
    matches the oracle rather than asserting it.
    """
    profile = caterpillar_profile(T)
    if any(d > 4 for d in profile.degrees):
        raise GraphError("regularity formula requires all degrees <= 4")
    return profile.r


def caterpillar_dim(T: Graph) -> int:
    """Krull dimension formula: the cutpoint count, for cutpoint degrees >= 3."""
    profile = caterpillar_profile(T)
    if any(d < 3 for d in profile.degrees):
        raise GraphError("dimension formula requires cutpoint degrees >= 3")
    return profile.r


def caterpillar_height(T: Graph) -> int:
    """Edge-ideal height |V(L(T))| - dim = (n - 1) - s under the same
    hypothesis as the dimension formula."""
    return (caterpillar_profile(T).n - 1) - caterpillar_dim(T)
