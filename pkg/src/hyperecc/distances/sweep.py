"""All-pairs distance estimates from one BFS tree by subtree merging.

Vertices x are taken leaves-first (increasing σ). For each x the sweep walks
x's root path from level h(x) down to 0, keeping a family of disjoint vertex
sets, one per level-k representative u, each holding the not-yet-assigned
vertices below u that x still owes an estimate. Whenever a representative is
close to x's level-k ancestor, every member v of its set gets
d̂(x, v) = h(x) + h(v) − 2k + additive and the set is dropped. Between levels
the surviving sets are merged into their representatives' parents, smaller
list appended onto larger. Pairs with the root are exactly h(x).
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, replace

from hyperecc.config import APSP_CHUNK_ROWS, BITMAP_MAX_N, POWER_BUDGET
from hyperecc.distances.estimators import CheckedEstimator, DistanceEstimator
from hyperecc.distances.power import PowerReach, power_reachability
from hyperecc.distances.storage import TriangularMatrix
from hyperecc.graph import BfsLayering, Graph, bfs
from hyperecc.logging import get_logger
from hyperecc.models import DistanceStats, SweepMode
from hyperecc.oracle import DistanceMatrix

log = get_logger(__name__)

Close = Callable[[int, int], bool]
# (x, k, family, assigned so far) at the start of each level
LevelObserver = Callable[[int, int, dict[int, list[int]], list[int]], None]


@dataclass(frozen=True, eq=False)
class DistanceEstimate:
    root: int
    threshold: int  # λ, or the ρ the estimated sweep was run with
    mode: SweepMode
    additive: int
    dhat: TriangularMatrix
    layering: BfsLayering
    stats: DistanceStats | None = None

    @property
    def n(self) -> int:
        return self.dhat.n

    def get(self, x: int, y: int) -> int:
        return self.dhat.get(x, y)

    def with_stats(self, stats: DistanceStats) -> DistanceEstimate:
        return replace(self, stats=stats)


def iter_sweep_rows(
    layering: BfsLayering,
    close: Close,
    additive: int,
    on_level: LevelObserver | None = None,
) -> Iterator[tuple[int, list[int], list[int]]]:
    """Yield (x, targets, estimates) for every non-root x in increasing σ.

    Each unordered pair appears in exactly one row: the row of its member with
    the smaller σ (the root pairs in the row of the other vertex).
    """
    height = layering.height.tolist()
    parent = layering.parent.tolist()
    sigma = layering.sigma.tolist()
    levels = layering.levels
    root = layering.source
    order = layering.order.tolist()
    for x in reversed(order[1:]):
        q = height[x]
        sx = sigma[x]
        family: dict[int, list[int]] = {u: [u] for u in levels[q] if sigma[u] > sx}
        targets: list[int] = []
        values: list[int] = []
        xk = x
        for k in range(q, -1, -1):
            if on_level is not None:
                on_level(x, k, family, targets)
            base = q + additive - 2 * k
            for u in list(family):
                if close(u, xk):
                    members = family.pop(u)
                    if k == 0:
                        members = [v for v in members if v != root]
                    targets.extend(members)
                    values.extend(base + height[v] for v in members)
            if k == 0:
                break
            merged: dict[int, list[int]] = {u: [u] for u in levels[k - 1]}
            for u, members in family.items():
                p = parent[u]
                bucket = merged[p]
                if len(members) > len(bucket):
                    members.extend(bucket)
                    merged[p] = members
                else:
                    bucket.extend(members)
            family = merged
            xk = parent[xk]
        targets.append(root)
        values.append(q)
        yield x, targets, values


def _run(
    layering: BfsLayering,
    close: Close,
    additive: int,
) -> TriangularMatrix:
    out = TriangularMatrix.zeros(layering.n)
    for x, targets, values in iter_sweep_rows(layering, close, additive):
        out.assign_row(x, targets, values)
    return out


def approximate_all_distances(
    g: Graph,
    lam: int,
    root: int,
    *,
    reach: PowerReach | None = None,
    budget: int = POWER_BUDGET,
    force: bool = False,
    chunk_rows: int = APSP_CHUNK_ROWS,
    bitmap_max_n: int = BITMAP_MAX_N,
) -> DistanceEstimate:
    """d̂ with one-sided additive error λ + 1 whenever λ is at least the thinness."""
    if reach is None:
        reach = power_reachability(
            g, lam, budget=budget, force=force, chunk_rows=chunk_rows, bitmap_max_n=bitmap_max_n
        )
    elif reach.lam != lam:
        raise ValueError(f"reach sets are for lambda={reach.lam}, not {lam}")
    contains = reach.contains
    layering = bfs(g, root)
    dhat = _run(layering, lambda u, xk: contains(xk, u), lam)
    log.info("distances.sweep", mode=SweepMode.EXACT_POWER.value, lam=lam, root=root, n=g.n)
    return DistanceEstimate(root, lam, SweepMode.EXACT_POWER, lam, dhat, layering)


def approximate_all_distances_estimated(
    g: Graph,
    rho: int,
    est: DistanceEstimator,
    root: int,
    *,
    threshold: int | None = None,
    check_against: DistanceMatrix | None = None,
) -> DistanceEstimate:
    """Same sweep, asking ``est`` whether d̃(u, x_k) <= 2ρ + 1 (or ``threshold``).

    With ``check_against`` every estimator answer is verified and a breach of
    its (α, β) contract raises ``EstimatorContractError``.
    """
    if rho < 0:
        raise ValueError("rho must be non-negative")
    limit = 2 * rho + 1 if threshold is None else threshold
    oracle: DistanceEstimator = (
        est if check_against is None else CheckedEstimator(est, check_against)
    )
    layering = bfs(g, root)
    dhat = _run(layering, lambda u, xk: oracle.query(u, xk) <= limit, limit)
    log.info(
        "distances.sweep",
        mode=SweepMode.ESTIMATOR.value,
        rho=rho,
        threshold=limit,
        estimator=repr(est),
        root=root,
        n=g.n,
    )
    return DistanceEstimate(root, rho, SweepMode.ESTIMATOR, limit, dhat, layering)
