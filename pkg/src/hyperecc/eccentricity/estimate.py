"""Eccentricity estimates for every vertex from one approximating tree.

``linear`` needs two FP scans to find its root; ``refined`` chases a mutually
distant pair first (a few more scans) for the tighter bound.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from hyperecc.eccentricity.geodesic import extract_geodesic, middle_vertex
from hyperecc.eccentricity.scans import fp_scan
from hyperecc.eccentricity.trees import (
    RootChoice,
    SpanningTree,
    bfs_tree,
    choose_root,
    tree_eccentricities,
)
from hyperecc.graph import Graph, IntArray, bfs
from hyperecc.logging import get_logger
from hyperecc.models import EccStrategy, TreeVariant
from hyperecc.oracle import EccentricityProfile

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Distortion:
    k: IntArray  # k(v) = ê(v) - ecc(v)
    k_max: int
    k_min: int
    k_avg: float
    histogram: dict[int, int]

    @classmethod
    def measure(cls, estimate: IntArray, exact: IntArray) -> Distortion:
        k = estimate - exact
        values, counts = np.unique(k, return_counts=True)
        return cls(
            k=k,
            k_max=int(k.max()),
            k_min=int(k.min()),
            k_avg=float(k.mean()),
            histogram={int(v): int(c) for v, c in zip(values, counts, strict=True)},
        )

    def percentages(self) -> dict[int, float]:
        total = len(self.k)
        return {k: 100.0 * c / total for k, c in self.histogram.items()}


@dataclass(frozen=True, eq=False)
class EccEstimate:
    estimate: IntArray
    variant: str
    tree: SpanningTree
    root: RootChoice
    distortion: Distortion | None = None

    def with_oracle(self, profile: EccentricityProfile) -> EccEstimate:
        return replace(self, distortion=Distortion.measure(self.estimate, profile.ecc))


@dataclass(frozen=True)
class RadiusDiameterBounds:
    center: int
    ecc_center: int  # upper bound on rad(G)
    far_vertex: int
    diam_lower: int  # d(u, v) <= diam(G)
    scans: int

    @property
    def rad_interval(self) -> tuple[int, int]:
        return ((self.diam_lower + 1) // 2, self.ecc_center)

    @property
    def diam_interval(self) -> tuple[int, int]:
        return (self.diam_lower, 2 * self.ecc_center)


def linear_root(g: Graph, start: int = 0) -> RootChoice:
    """Two FP scans: v furthest from start, t furthest from v, root at ⌈d(v,t)/2⌉ from t."""
    v, _ = fp_scan(g, start)
    t, from_v = fp_scan(g, v)
    path = extract_geodesic(g, v, t, from_v)
    return RootChoice(EccStrategy.LINEAR.value, middle_vertex(path), path, far_vertex=v)


def estimate_from_root(
    g: Graph,
    root: RootChoice,
    oracle: EccentricityProfile | None = None,
) -> EccEstimate:
    tree = tree_eccentricities(bfs_tree(g, root.root))
    assert tree.tree_ecc is not None
    est = EccEstimate(estimate=tree.tree_ecc, variant=root.label, tree=tree, root=root)
    return est.with_oracle(oracle) if oracle is not None else est


def estimate_eccentricities(
    g: Graph,
    strategy: EccStrategy,
    oracle: EccentricityProfile | None = None,
    start: int = 0,
) -> EccEstimate:
    if strategy is EccStrategy.LINEAR:
        root = linear_root(g, start)
    else:
        root = choose_root(g, TreeVariant.T1, start=start)
    root = replace(root, label=strategy.value)
    est = estimate_from_root(g, root, oracle)
    log.info("ecc.estimated", strategy=strategy.value, root=root.root, n=g.n)
    return est


def bound_radius_diameter(
    g: Graph,
    strategy: EccStrategy,
    start: int = 0,
) -> RadiusDiameterBounds:
    """Certified rad/diam interval from an approximate center and a far vertex."""
    if strategy is EccStrategy.LINEAR:
        root = linear_root(g, start)
        assert root.far_vertex is not None
        far, diam_lower, scans = root.far_vertex, root.geodesic.length, 2
    else:
        root = choose_root(g, TreeVariant.T1, start=start)
        assert root.pair is not None
        far, diam_lower, scans = root.pair.u, root.pair.distance, root.pair.scans + 1
    ecc_center = bfs(g, root.root).depth
    return RadiusDiameterBounds(
        center=root.root,
        ecc_center=ecc_center,
        far_vertex=far,
        diam_lower=diam_lower,
        scans=scans + 1,
    )
