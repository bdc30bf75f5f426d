"""Separation levels on a BFS layering and the distance sandwich they give."""

from __future__ import annotations

from hyperecc.distances.estimators import MatrixProximity, Proximity
from hyperecc.graph import BfsLayering
from hyperecc.oracle import DistanceMatrix


def separation_level(
    layering: BfsLayering,
    proximity: Proximity,
    x: int,
    y: int,
    threshold: int,
) -> int:
    """Largest k <= min(h(x), h(y)) whose level-k ancestors are within ``threshold``."""
    hx, hy = int(layering.height[x]), int(layering.height[y])
    k = min(hx, hy)
    xk = layering.ancestor(x, k)
    yk = layering.ancestor(y, k)
    while k > 0 and not proximity.within(xk, yk, threshold):
        xk = int(layering.parent[xk])
        yk = int(layering.parent[yk])
        k -= 1
    return k


def closed_form_estimate(
    layering: BfsLayering,
    proximity: Proximity,
    x: int,
    y: int,
    threshold: int,
    additive: int,
) -> int:
    """h(x) + h(y) − 2·sl + additive, with pairs touching the root read off exactly."""
    if x == y:
        return 0
    hx, hy = int(layering.height[x]), int(layering.height[y])
    if layering.source in (x, y):
        return hx + hy
    return hx + hy - 2 * separation_level(layering, proximity, x, y, threshold) + additive


def distance_sandwich(
    layering: BfsLayering,
    distances: DistanceMatrix,
    x: int,
    y: int,
    lam: int,
) -> tuple[int, int]:
    """(h(x)+h(y)−2k−1, h(x)+h(y)−2k+d(x_k, y_k)) with k the separation level at λ.

    The upper end always holds; the lower end needs λ at least the thinness.
    """
    exact = MatrixProximity(distances)
    k = separation_level(layering, exact, x, y, lam)
    base = int(layering.height[x]) + int(layering.height[y]) - 2 * k
    gap = exact.distance(layering.ancestor(x, k), layering.ancestor(y, k))
    return base - 1, base + gap
