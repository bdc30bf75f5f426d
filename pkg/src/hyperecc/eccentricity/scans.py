"""Furthest-point (FP) scans and mutually distant pairs."""

from __future__ import annotations

from hyperecc.graph import BfsLayering, Graph, bfs
from hyperecc.logging import get_logger
from hyperecc.models import MutualPair

log = get_logger(__name__)


def fp_scan(g: Graph, u: int) -> tuple[int, BfsLayering]:
    """One BFS from u; returns the lowest-id vertex of F(u) and the layering."""
    layering = bfs(g, u)
    return layering.furthest(), layering


def furthest_vertex(g: Graph, u: int) -> int:
    return fp_scan(g, u)[0]


def mutually_distant_pair(g: Graph, start: int = 0) -> MutualPair:
    """Chase furthest vertices from ``start`` until the distance stops growing.

    With v0 = start and v(i+1) = furthest(v(i)), stops at the first i >= 1 where
    d(v(i), v(i+1)) <= d(v(i-1), v(i)) and returns (v(i-1), v(i)).
    """
    cur, layering = fp_scan(g, start)
    prev = start
    prev_dist = int(layering.height[cur])
    trace = [cur]
    dists = [prev_dist]
    while True:
        nxt, layering = fp_scan(g, cur)
        dist = int(layering.height[nxt])
        trace.append(nxt)
        dists.append(dist)
        if dist <= prev_dist:
            break
        prev, cur, prev_dist = cur, nxt, dist
    pair = MutualPair(
        u=prev,
        v=cur,
        distance=prev_dist,
        scans=len(trace),
        trace=tuple(trace),
        trace_distances=tuple(dists),
    )
    log.debug("ecc.mutual_pair", u=pair.u, v=pair.v, distance=pair.distance, scans=pair.scans)
    return pair
