"""Line graph construction and its cutpoint / bridge / block structure.

The line graph of G has one vertex per edge of G, with two vertices
adjacent exactly when the underlying edges share an endpoint.  Vertices
are ordered lexicographically by their (a, b) source-edge label, which
makes every downstream fixture deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class LineGraph:
    """A graph whose vertex i came from the source edge labels[i]."""

    graph: Graph
    labels: tuple[tuple[int, int], ...]

    def vertex_of(self, u: int, v: int) -> int:
        """Line-graph vertex id of the source edge {u, v}."""
        e = (u, v) if u < v else (v, u)
        try:
            return self.labels.index(e)
        except ValueError:
            raise GraphError(f"{e} is not an edge of the source graph") from None


def line_graph(G: Graph) -> LineGraph:
    """Line graph of G; the edgeless graph maps to the empty graph."""
    labels = G.edges()
    m = len(labels)
    edges = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if set(labels[i]) & set(labels[j])
    ]
    return LineGraph(Graph(m, edges), labels)


def edge_degree(G: Graph, e: tuple[int, int]) -> int:
    """deg u + deg v - 2 for an edge e = {u, v}; the degree of e in L(G)."""
    u, v = e
    if not G.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge")
    return G.degree(u) + G.degree(v) - 2


def articulation_points(G: Graph) -> set[int]:
    """Vertices whose removal disconnects G (per connected component)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    points: set[int] = set()
    counter = 0
    for root in range(G.n):
        if root in disc:
            continue
        # iterative DFS; (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter(G.adj[root]))]
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(G.adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if pv != root and low[v] >= disc[pv]:
                        points.add(pv)
        if root_children >= 2:
            points.add(root)
    return points


def bridge_edges(G: Graph) -> set[tuple[int, int]]:
    """Edges whose removal disconnects their component."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[tuple[int, int]] = set()
    counter = 0
    for root in range(G.n):
        if root in disc:
            continue
        stack = [(root, -1, iter(G.adj[root]))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(G.adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        bridges.add((min(v, pv), max(v, pv)))
    return bridges


def biconnected_components(G: Graph) -> list[frozenset[int]]:
    """Blocks of G as vertex sets; isolated vertices yield no block."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    for root in range(G.n):
        if root in disc:
            continue
        stack = [(root, -1, iter(G.adj[root]))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    if disc[w] < disc[v]:
                        low[v] = min(low[v], disc[w])
                        edge_stack.append((v, w))
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(G.adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] >= disc[pv]:
                        # pop one block off the edge stack
                        verts: set[int] = set()
                        while edge_stack:
                            a, b = edge_stack.pop()
                            verts.update((a, b))
                            if (a, b) == (pv, v):
                                break
                        blocks.append(frozenset(verts))
    return blocks


def line_cutpoints(G: Graph) -> set[int]:
    """Cutpoints of L(G), cross-checked against the bridge criterion.

    A line-graph vertex is a cutpoint exactly when its source edge is a
    bridge of G with both endpoints of degree at least two.
    """
    if not G.is_connected():
        raise GraphError("line_cutpoints requires a connected graph")
    L = line_graph(G)
    direct = articulation_points(L.graph)
    bridges = bridge_edges(G)
    predicted = {
        i
        for i, (u, v) in enumerate(L.labels)
        if (u, v) in bridges and G.degree(u) >= 2 and G.degree(v) >= 2
    }
    if direct != predicted:
        raise AssertionError(
            f"line cutpoint characterization violated: {direct} != {predicted}"
        )
    return direct


def line_bridges(G: Graph) -> set[tuple[int, int]]:
    """Bridges of L(G), cross-checked against the degree-two criterion.

    An L(G)-edge is a bridge exactly when its two source edges are
    bridges of G meeting in a vertex of degree two.
    """
    if not G.is_connected():
        raise GraphError("line_bridges requires a connected graph")
    L = line_graph(G)
    direct = bridge_edges(L.graph)
    bridges = bridge_edges(G)
    predicted = set()
    for i, j in L.graph.edges():
        e, f = set(L.labels[i]), set(L.labels[j])
        shared = e & f
        if len(shared) != 1:
            continue
        (w,) = shared
        if tuple(sorted(e)) in bridges and tuple(sorted(f)) in bridges \
                and G.degree(w) == 2:
            predicted.add((i, j))
    if direct != predicted:
        raise AssertionError(
            f"line bridge characterization violated: {direct} != {predicted}"
        )
    return direct


def validate_block_structure(L: LineGraph) -> bool:
    """True iff every block is a clique and every cutpoint is on exactly two.

    Line graphs of trees must satisfy both conditions.
    """
    g = L.graph
    blocks = biconnected_components(g)
    for block in blocks:
        k = len(block)
        H, _ = g.induced(block)
        if H.num_edges != k * (k - 1) // 2:
            return False
    for v in articulation_points(g):
        if sum(1 for block in blocks if v in block) != 2:
            return False
    return True
