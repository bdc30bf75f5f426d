"""Error statistics of distance estimates and the smallest admissible δ search."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from hyperecc.config import APSP_CHUNK_ROWS, POWER_BUDGET
from hyperecc.distances.power import power_reachability
from hyperecc.distances.sweep import DistanceEstimate, approximate_all_distances
from hyperecc.graph import BfsLayering, Graph, bfs
from hyperecc.logging import get_logger
from hyperecc.models import DistanceStats
from hyperecc.oracle import DistanceMatrix

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class AdmissibleDelta:
    delta: int
    estimate: DistanceEstimate
    trace: list[tuple[int, DistanceStats]] = field(default_factory=list)

    @property
    def stats(self) -> DistanceStats:
        assert self.estimate.stats is not None
        return self.estimate.stats


def distance_error_stats(
    estimate: DistanceEstimate,
    exact: DistanceMatrix,
    sources: Sequence[int] | None = None,
) -> DistanceStats:
    """Δ = d̂ − d over all unordered pairs, or over the rows of ``sources`` only.

    ``exact`` is the full n×n matrix, or one row per source when sampling.
    """
    dense = estimate.dhat.to_dense().astype(np.int64)
    if sources is None:
        rows, cols = np.tril_indices(estimate.n, k=-1)
        diff = dense[rows, cols] - exact[rows, cols]
    else:
        src = np.asarray(sources, dtype=np.int64)
        block = dense[src] - exact.astype(np.int64)
        rows, cols = np.nonzero(src[:, None] != np.arange(estimate.n)[None, :])
        diff = block[rows, cols]
        rows = src[rows]
    if not len(diff):
        return DistanceStats(
            delta_max=0,
            delta_min=0,
            delta_avg=0.0,
            pairs=0,
            worst_pair=(0, 0),
            sampled=sources is not None,
        )
    worst = int(np.argmax(diff))
    return DistanceStats(
        delta_max=int(diff[worst]),
        delta_min=int(diff.min()),
        delta_avg=float(diff.mean()),
        pairs=len(diff),
        worst_pair=(int(rows[worst]), int(cols[worst])),
        sampled=sources is not None,
    )


def sample_sources(layering: BfsLayering, k: int) -> list[int]:
    """The k vertices most distant from the root (ties by id)."""
    order = np.lexsort((np.arange(layering.n), -layering.height))
    return order[:k].tolist()


def smallest_admissible_delta(
    g: Graph,
    root: int,
    exact: DistanceMatrix,
    *,
    sources: Sequence[int] | None = None,
    budget: int = POWER_BUDGET,
    force: bool = False,
    chunk_rows: int = APSP_CHUNK_ROWS,
) -> AdmissibleDelta:
    """Least δ >= 0 with Δ_max(δ) <= δ + 1, scanning δ = 0, 1, 2, ..."""
    upper = 2 * bfs(g, root).depth  # >= diam(G), where admissibility is certain
    trace: list[tuple[int, DistanceStats]] = []
    delta = 0
    while True:
        reach = power_reachability(g, delta, budget=budget, force=force, chunk_rows=chunk_rows)
        estimate = approximate_all_distances(g, delta, root, reach=reach)
        stats = distance_error_stats(estimate, exact, sources)
        trace.append((delta, stats))
        log.debug("distances.admissible_step", delta=delta, delta_max=stats.delta_max)
        if stats.delta_max <= delta + 1 or delta >= upper:
            return AdmissibleDelta(delta, estimate.with_stats(stats), trace)
        delta += 1
