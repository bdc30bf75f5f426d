"""Geodesics read off BFS parents, and their middle vertices."""

from __future__ import annotations

from hyperecc.graph import BfsLayering, Graph, bfs
from hyperecc.models import GeodesicPath


def extract_geodesic(
    g: Graph,
    u: int,
    v: int,
    layering: BfsLayering | None = None,
) -> GeodesicPath:
    """Shortest u-v path read off the BFS(u) parents, walking back from v."""
    if layering is None or layering.source != u:
        layering = bfs(g, u)
    return GeodesicPath(vertices=tuple(reversed(layering.path_to_root(v))))


def middle_vertex(path: GeodesicPath) -> int:
    """Vertex at distance ⌈d/2⌉ from the far endpoint (⌊d/2⌋ from the start)."""
    d = path.length
    return path.at(d - (d + 1) // 2)
