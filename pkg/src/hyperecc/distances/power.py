"""Graph powers: for each vertex the sorted set of vertices within distance λ."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import dijkstra

from hyperecc.config import APSP_CHUNK_ROWS, BITMAP_MAX_N, POWER_BUDGET
from hyperecc.errors import BudgetExceededError
from hyperecc.graph import Graph, IntArray
from hyperecc.logging import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class PowerReach:
    lam: int
    reach: list[IntArray]
    fast_lookup: bool = True
    _sets: dict[int, frozenset[int]] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.reach)

    @property
    def entries(self) -> int:
        return sum(len(r) for r in self.reach)

    def ball(self, v: int) -> IntArray:
        return self.reach[v]

    def contains(self, v: int, u: int) -> bool:
        """u ∈ reach(v), i.e. d(u, v) <= λ."""
        if self.fast_lookup:
            members = self._sets.get(v)
            if members is None:
                members = frozenset(self.reach[v].tolist())
                self._sets[v] = members
            return u in members
        row = self.reach[v]
        pos = int(np.searchsorted(row, u))
        return pos < len(row) and int(row[pos]) == u

    def within(self, u: int, v: int, threshold: int) -> bool:
        if threshold != self.lam:
            raise ValueError(f"reach sets answer d <= {self.lam} only, not d <= {threshold}")
        return self.contains(v, u)


def power_reachability(
    g: Graph,
    lam: int,
    *,
    budget: int = POWER_BUDGET,
    force: bool = False,
    chunk_rows: int = APSP_CHUNK_ROWS,
    bitmap_max_n: int = BITMAP_MAX_N,
) -> PowerReach:
    """One depth-λ truncated BFS per vertex."""
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    fast = g.n <= bitmap_max_n
    if lam == 0:
        return PowerReach(lam, [np.array([v], dtype=np.int64) for v in range(g.n)], fast)
    reach: list[IntArray] = []
    stored = 0
    for start in range(0, g.n, chunk_rows):
        sources = np.arange(start, min(start + chunk_rows, g.n))
        rows = np.atleast_2d(
            dijkstra(g.csr, directed=False, indices=sources, unweighted=True, limit=lam + 0.5)
        )
        for row in rows:
            members = np.flatnonzero(row <= lam).astype(np.int64)
            reach.append(members)
            stored += len(members)
        if stored > budget and not force:
            projected = stored * g.n // len(reach)
            raise BudgetExceededError(
                f"power reach sets for lambda={lam}",
                projected,
                budget,
                hint="pass --force or raise HYPERECC_POWER_BUDGET",
            )
    log.debug("distances.power_reach", lam=lam, entries=stored, avg_ball=stored / max(g.n, 1))
    return PowerReach(lam, reach, fast)
