"""Immutable undirected simple graph in CSR form with contiguous vertex ids.

``indptr``/``indices`` follow the scipy CSR convention; every neighbor list is
strictly ascending, which is what makes BFS parents, geodesics and furthest
vertices reproducible downstream.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt
from scipy.sparse import csr_array

IntArray = npt.NDArray[np.int64]


@dataclass(frozen=True, eq=False)
class Graph:
    indptr: IntArray
    indices: IntArray
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: npt.ArrayLike,
        labels: Sequence[str] | None = None,
    ) -> Graph:
        """Build a simple graph: self-loops dropped, duplicates and reversals collapsed."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if labels is not None and len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        arr = np.asarray(edges, dtype=np.int64)
        arr = arr.reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise ValueError(f"edge endpoint outside 0..{n - 1}")
        arr = arr[arr[:, 0] != arr[:, 1]]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        canon = np.unique(np.stack([lo, hi], axis=1), axis=0) if len(arr) else arr
        src = np.concatenate([canon[:, 0], canon[:, 1]])
        dst = np.concatenate([canon[:, 1], canon[:, 0]])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(
            indptr=indptr,
            indices=dst.astype(np.int64),
            labels=tuple(labels) if labels is not None else None,
        )

    # --- Size ------------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    @property
    def average_degree(self) -> float:
        return 2 * self.edge_count / self.n if self.n else 0.0

    # --- Access ----------------------------------------------------------
    def neighbors(self, v: int) -> IntArray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        pos = int(np.searchsorted(row, v))
        return pos < len(row) and int(row[pos]) == v

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Plain Python neighbor lists for the scalar hot loops (BFS, sweeps)."""
        flat = self.indices.tolist()
        bounds = self.indptr.tolist()
        return [flat[bounds[v] : bounds[v + 1]] for v in range(self.n)]

    @cached_property
    def csr(self) -> csr_array:
        data = np.ones(len(self.indices), dtype=np.int8)
        return csr_array((data, self.indices, self.indptr), shape=(self.n, self.n))

    def edges(self) -> IntArray:
        """Canonical edge array, one row (u, v) per edge with u < v, ascending."""
        rows = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        mask = rows < self.indices
        return np.stack([rows[mask], self.indices[mask]], axis=1)

    def induced_subgraph(self, vertices: npt.ArrayLike) -> Graph:
        """Subgraph induced by ``vertices`` (ascending); new id i is ``vertices[i]``."""
        keep = np.asarray(vertices, dtype=np.int64)
        remap = np.full(self.n, -1, dtype=np.int64)
        remap[keep] = np.arange(len(keep), dtype=np.int64)
        edges = self.edges()
        mapped = remap[edges]
        mapped = mapped[(mapped >= 0).all(axis=1)]
        labels = [self.label(int(v)) for v in keep] if self.labels is not None else None
        return Graph.from_edges(len(keep), mapped, labels)

    def validate(self) -> None:
        """Check the CSR invariants; raises ``ValueError`` on the first breach."""
        for u in range(self.n):
            row = self.neighbors(u)
            if len(row) and (row[0] < 0 or row[-1] >= self.n):
                raise ValueError(f"neighbor of {u} out of range")
            if np.any(np.diff(row) <= 0):
                raise ValueError(f"neighbors of {u} not strictly ascending")
            if np.any(row == u):
                raise ValueError(f"self-loop at {u}")
            for v in row.tolist():
                if not self.has_edge(v, u):
                    raise ValueError(f"edge {u}-{v} is not symmetric")
