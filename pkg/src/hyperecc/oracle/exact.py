"""Brute-force ground truth: all-pairs BFS rows, eccentricities, center geometry.

Every routine here is at least quadratic and sits behind the oracle budget
(n·m edge visits). Rows come from ``scipy.sparse.csgraph.shortest_path`` on the
unit-weight CSR adjacency, in chunks of sources so memory stays bounded.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, partial

import numpy as np
import numpy.typing as npt
from scipy.sparse.csgraph import connected_components, shortest_path

from hyperecc.config import APSP_CHUNK_ROWS, ORACLE_BUDGET
from hyperecc.errors import BudgetExceededError, DisconnectedGraphError
from hyperecc.graph import Graph, IntArray, bfs, multi_source_bfs
from hyperecc.logging import get_logger

log = get_logger(__name__)

DistanceMatrix = npt.NDArray[np.int32]


@dataclass(frozen=True, eq=False)
class EccentricityProfile:
    ecc: IntArray
    rad: int
    diam: int
    center: tuple[int, ...]

    @classmethod
    def from_eccentricities(cls, ecc: npt.ArrayLike) -> EccentricityProfile:
        values = np.asarray(ecc, dtype=np.int64)
        rad = int(values.min())
        return cls(
            ecc=values,
            rad=rad,
            diam=int(values.max()),
            center=tuple(np.flatnonzero(values == rad).tolist()),
        )

    @property
    def n(self) -> int:
        return len(self.ecc)

    @cached_property
    def layers(self) -> dict[int, tuple[int, ...]]:
        """k -> C^k(G), the vertices with eccentricity rad + k (only non-empty layers)."""
        out: dict[int, list[int]] = {}
        for v, e in enumerate(self.ecc.tolist()):
            out.setdefault(e - self.rad, []).append(v)
        return {k: tuple(out[k]) for k in sorted(out)}

    def layer(self, k: int) -> tuple[int, ...]:
        return self.layers.get(k, ())


@dataclass(frozen=True, eq=False)
class CenterGeometry:
    center_diam: int
    center_connected: bool
    dist_to_center: IntArray


def check_oracle_budget(
    g: Graph,
    what: str,
    *,
    budget: int = ORACLE_BUDGET,
    force: bool = False,
) -> None:
    needed = g.n * max(g.edge_count, 1)
    if needed > budget and not force:
        raise BudgetExceededError(
            what, needed, budget, hint="pass --force or raise HYPERECC_ORACLE_BUDGET"
        )


def _bfs_rows(g: Graph, sources: IntArray) -> DistanceMatrix:
    dist = shortest_path(g.csr, method="D", directed=False, unweighted=True, indices=sources)
    dist = np.atleast_2d(dist)
    if not np.isfinite(dist).all():
        raise DisconnectedGraphError("graph not connected: some vertex pair has no path")
    return dist.astype(np.int32)


def iter_distance_rows(
    g: Graph,
    sources: Iterable[int] | None = None,
    *,
    chunk_rows: int = APSP_CHUNK_ROWS,
    workers: int = 1,
) -> Iterator[tuple[IntArray, DistanceMatrix]]:
    """Yield (sources, rows) chunks in source order; chunks may run on a thread pool."""
    src = (
        np.arange(g.n, dtype=np.int64)
        if sources is None
        else np.asarray(list(sources), dtype=np.int64)
    )
    chunks = [src[i : i + chunk_rows] for i in range(0, len(src), max(chunk_rows, 1))]
    if workers <= 1:
        for chunk in chunks:
            yield chunk, _bfs_rows(g, chunk)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        yield from zip(chunks, pool.map(partial(_bfs_rows, g), chunks), strict=True)


def distance_rows(
    g: Graph,
    sources: Sequence[int],
    *,
    chunk_rows: int = APSP_CHUNK_ROWS,
    workers: int = 1,
) -> DistanceMatrix:
    """Exact distances from each of ``sources`` to every vertex, one row per source."""
    if not len(sources):
        return np.zeros((0, g.n), dtype=np.int32)
    chunks = iter_distance_rows(g, sources, chunk_rows=chunk_rows, workers=workers)
    parts = [rows for _, rows in chunks]
    return np.vstack(parts)


def all_eccentricities(
    g: Graph,
    *,
    budget: int = ORACLE_BUDGET,
    force: bool = False,
    chunk_rows: int = APSP_CHUNK_ROWS,
    workers: int = 1,
) -> EccentricityProfile:
    check_oracle_budget(g, "exact eccentricities", budget=budget, force=force)
    ecc = np.empty(g.n, dtype=np.int64)
    for chunk, rows in iter_distance_rows(g, chunk_rows=chunk_rows, workers=workers):
        ecc[chunk] = rows.max(axis=1)
    profile = EccentricityProfile.from_eccentricities(ecc)
    log.info(
        "oracle.eccentricities",
        n=g.n,
        rad=profile.rad,
        diam=profile.diam,
        center=len(profile.center),
    )
    return profile


def distance_matrix(
    g: Graph,
    *,
    budget: int = ORACLE_BUDGET,
    force: bool = False,
    chunk_rows: int = APSP_CHUNK_ROWS,
    workers: int = 1,
) -> DistanceMatrix:
    check_oracle_budget(g, "all-pairs distances", budget=budget, force=force)
    out = np.empty((g.n, g.n), dtype=np.int32)
    for chunk, rows in iter_distance_rows(g, chunk_rows=chunk_rows, workers=workers):
        out[chunk] = rows
    return out


def profile_from_matrix(distances: DistanceMatrix) -> EccentricityProfile:
    return EccentricityProfile.from_eccentricities(distances.max(axis=1))


def furthest_set(g: Graph, x: int) -> tuple[int, ...]:
    """F(x): every vertex at distance ecc(x) from x, ascending."""
    height = bfs(g, x).height
    return tuple(np.flatnonzero(height == height.max()).tolist())


def eccentricity_layer(profile: EccentricityProfile, k: int) -> tuple[int, ...]:
    return profile.layer(k)


def center_geometry(
    g: Graph,
    profile: EccentricityProfile,
    distances: DistanceMatrix | None = None,
) -> CenterGeometry:
    center = np.asarray(profile.center, dtype=np.int64)
    if distances is not None:
        block = distances[np.ix_(center, center)]
    else:
        block = distance_rows(g, profile.center)[:, center]
    sub = g.induced_subgraph(center)
    components, _ = connected_components(sub.csr, directed=False)
    dist = multi_source_bfs(g.adjacency, profile.center)
    return CenterGeometry(
        center_diam=int(block.max()),
        center_connected=int(components) == 1,
        dist_to_center=np.asarray(dist, dtype=np.int64),
    )


def ball_cover_radius(g: Graph, c: int, targets: Iterable[int]) -> int:
    """Least i with B(c, i) containing every target."""
    height = bfs(g, c).height
    idx = np.asarray(list(targets), dtype=np.int64)
    return int(height[idx].max()) if len(idx) else 0


def distance_to_set(g: Graph, v: int, targets: Iterable[int]) -> int:
    height = bfs(g, v).height
    idx = np.asarray(list(targets), dtype=np.int64)
    return int(height[idx].min())
