"""Breadth-first search with the deterministic ascending-id enqueue rule.

``bfs`` numbers vertices from n (the source) down to 1 in visit order, the
sigma numbering the distance sweep consumes. Each call owns its workspace, so
concurrent runs from different sources never interfere.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from hyperecc.errors import DisconnectedGraphError
from hyperecc.graph.model import Graph, IntArray

NO_PARENT = -1


@dataclass(frozen=True, eq=False)
class BfsLayering:
    source: int
    height: IntArray
    parent: IntArray  # parent[source] == NO_PARENT
    sigma: IntArray  # source gets n, last visited vertex gets 1
    order: IntArray

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def depth(self) -> int:
        return int(self.height.max()) if self.n else 0

    @cached_property
    def levels(self) -> list[list[int]]:
        """Vertices per height, each level in visit order."""
        levels: list[list[int]] = [[] for _ in range(self.depth + 1)]
        height = self.height.tolist()
        for v in self.order.tolist():
            levels[height[v]].append(v)
        return levels

    def ancestor(self, x: int, level: int) -> int:
        """The vertex of x's root path at height ``level`` (x itself at its own height)."""
        h = int(self.height[x])
        if not 0 <= level <= h:
            raise ValueError(f"level {level} outside 0..{h} for vertex {x}")
        for _ in range(h - level):
            x = int(self.parent[x])
        return x

    def path_to_root(self, x: int) -> list[int]:
        path = [x]
        while path[-1] != self.source:
            path.append(int(self.parent[path[-1]]))
        return path

    def ball(self, radius: int) -> IntArray:
        """B(source, radius) as an ascending vertex array."""
        return np.flatnonzero(self.height <= radius).astype(np.int64)

    def in_ball(self, v: int, radius: int) -> bool:
        return int(self.height[v]) <= radius

    def furthest(self) -> int:
        """Lowest-id vertex at maximum height."""
        return int(np.argmax(self.height))


def bfs(g: Graph, source: int) -> BfsLayering:
    """BFS(source) enqueuing neighbors in ascending id order."""
    n = g.n
    if not 0 <= source < n:
        raise ValueError(f"source {source} outside 0..{n - 1}")
    adjacency = g.adjacency
    height = [-1] * n
    parent = [NO_PARENT] * n
    height[source] = 0
    order = [source]
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        hu = height[u] + 1
        for w in adjacency[u]:
            if height[w] < 0:
                height[w] = hu
                parent[w] = u
                order.append(w)
    if len(order) != n:
        raise DisconnectedGraphError(
            f"graph not connected: BFS({source}) reached {len(order)} of {n} vertices"
        )
    sigma = [0] * n
    for rank, v in enumerate(order):
        sigma[v] = n - rank
    return BfsLayering(
        source=source,
        height=np.asarray(height, dtype=np.int64),
        parent=np.asarray(parent, dtype=np.int64),
        sigma=np.asarray(sigma, dtype=np.int64),
        order=np.asarray(order, dtype=np.int64),
    )


def multi_source_bfs(adjacency: Sequence[Sequence[int]], sources: Iterable[int]) -> list[int]:
    """Distance from the nearest source for every vertex (-1 where unreachable)."""
    dist = [-1] * len(adjacency)
    queue: list[int] = []
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist
