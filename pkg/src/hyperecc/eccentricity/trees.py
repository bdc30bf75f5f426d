"""Eccentricity-approximating BFS spanning trees and exact tree eccentricities.

A BFS tree rooted near the center of a hyperbolic graph approximates every
vertex eccentricity up to a small additive term. Tree eccentricities are
cheap: ecc_T(v) = d_T(v, C(T)) + rad(T), where C(T) is the middle vertex or
middle edge of any diametral path of T.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from hyperecc.eccentricity.geodesic import extract_geodesic, middle_vertex
from hyperecc.eccentricity.scans import furthest_vertex, mutually_distant_pair
from hyperecc.errors import MissingOracleError
from hyperecc.graph import NO_PARENT, Graph, IntArray, bfs, multi_source_bfs
from hyperecc.models import GeodesicPath, MutualPair, TreeVariant
from hyperecc.oracle import EccentricityProfile


@dataclass(frozen=True, eq=False)
class SpanningTree:
    root: int
    parent: IntArray
    tree_ecc: IntArray | None = None
    tree_center: tuple[int, ...] = ()
    tree_rad: int | None = None

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def measured(self) -> bool:
        return self.tree_ecc is not None

    @cached_property
    def graph(self) -> Graph:
        """The tree as a Graph over the same vertex ids."""
        children = np.flatnonzero(self.parent != NO_PARENT)
        edges = np.stack([children, self.parent[children]], axis=1)
        return Graph.from_edges(self.n, edges)

    def spans(self, g: Graph) -> bool:
        """True when every parent edge is an edge of ``g``."""
        return all(
            g.has_edge(v, int(p)) for v, p in enumerate(self.parent.tolist()) if p != NO_PARENT
        )


@dataclass(frozen=True)
class RootChoice:
    label: str
    root: int
    geodesic: GeodesicPath
    pair: MutualPair | None = None
    far_vertex: int | None = None


def bfs_tree(g: Graph, root: int) -> SpanningTree:
    return SpanningTree(root=root, parent=bfs(g, root).parent)


def choose_root(
    g: Graph,
    variant: TreeVariant,
    oracle: EccentricityProfile | None = None,
    start: int = 0,
) -> RootChoice:
    if variant is TreeVariant.T1:
        pair = mutually_distant_pair(g, start)
        path = extract_geodesic(g, pair.u, pair.v)
        return RootChoice(variant.value, middle_vertex(path), path, pair=pair)
    if oracle is None:
        raise MissingOracleError(f"{variant.value} requires exact profile")
    if variant is TreeVariant.T2:
        v = furthest_vertex(g, start)
        path = extract_geodesic(g, v, start)
        w = path.at(min(oracle.rad, path.length))
        return RootChoice(variant.value, w, path, far_vertex=v)
    c = oracle.center[0]
    return RootChoice(variant.value, c, GeodesicPath(vertices=(c,)))


def build_approx_tree(
    g: Graph,
    variant: TreeVariant,
    oracle: EccentricityProfile | None = None,
    start: int = 0,
) -> SpanningTree:
    return bfs_tree(g, choose_root(g, variant, oracle, start).root)


def tree_eccentricities(t: SpanningTree) -> SpanningTree:
    """Fill tree_ecc, tree_center and tree_rad in linear time."""
    tg = t.graph
    a = bfs(tg, t.root).furthest()
    from_a = bfs(tg, a)
    b = from_a.furthest()
    path = extract_geodesic(tg, a, b, from_a).vertices
    d = len(path) - 1
    if d % 2 == 0:
        center: tuple[int, ...] = (path[d // 2],)
    else:
        center = tuple(sorted((path[d // 2], path[d // 2 + 1])))
    rad = (d + 1) // 2
    dist = np.asarray(multi_source_bfs(tg.adjacency, center), dtype=np.int64)
    return replace(t, tree_ecc=dist + rad, tree_center=center, tree_rad=rad)


def tree_diameter(t: SpanningTree) -> int:
    if t.tree_rad is None:
        t = tree_eccentricities(t)
    assert t.tree_rad is not None
    return 2 * t.tree_rad - (1 if len(t.tree_center) == 2 else 0)
