"""Graph substrate: CSR model, edge-list I/O, components and BFS."""

from hyperecc.graph.bfs import NO_PARENT, BfsLayering, bfs, multi_source_bfs
from hyperecc.graph.components import ComponentSelection, is_connected, largest_component
from hyperecc.graph.io import format_edge_list, parse_edge_list, read_edge_list
from hyperecc.graph.model import Graph, IntArray

__all__ = [
    "NO_PARENT",
    "BfsLayering",
    "ComponentSelection",
    "Graph",
    "IntArray",
    "bfs",
    "format_edge_list",
    "is_connected",
    "largest_component",
    "multi_source_bfs",
    "parse_edge_list",
    "read_edge_list",
]
