"""Exact invariants of edge ideals of line graphs of trees.

The package pairs closed-form combinatorial counts with an independent
homological oracle (graded Betti numbers via restricted-complex
homology) and an exhaustive tree-enumeration harness that verifies the
two against each other.
"""

__version__ = "0.1.0"

from .graph import Graph, GraphError, build_graph
from .linegraph import LineGraph, edge_degree, line_graph

__all__ = [
    "Graph",
    "GraphError",
    "LineGraph",
    "__version__",
    "build_graph",
    "edge_degree",
    "line_graph",
]
