"""Seeded synthetic graph families used by the harness and the property suites."""

from __future__ import annotations

import numpy as np

from hyperecc.errors import GeneratorSpecError
from hyperecc.graph.components import is_connected
from hyperecc.graph.model import Graph

MAX_RESAMPLE_ATTEMPTS = 1_000


def path_graph(n: int) -> Graph:
    _require(n >= 1, "path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, "cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int) -> Graph:
    _require(rows >= 1 and cols >= 1, "grid dimensions must be positive")
    edges: list[tuple[int, int]] = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def star_graph(leaves: int) -> Graph:
    """K1,leaves with the hub at id 0."""
    _require(leaves >= 1, "star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    _require(n >= 1, "complete graph needs at least one vertex")
    iu, ju = np.triu_indices(n, k=1)
    return Graph.from_edges(n, np.stack([iu, ju], axis=1))


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Random recursive tree: vertex i attaches to a uniform earlier vertex."""
    _require(n >= 1, "tree needs at least one vertex")
    parents = [int(rng.integers(0, i)) for i in range(1, n)]
    return Graph.from_edges(n, [(p, i) for i, p in enumerate(parents, start=1)])


def random_connected_graph(
    n: int,
    p: float,
    rng: np.random.Generator,
    max_attempts: int = MAX_RESAMPLE_ATTEMPTS,
) -> Graph:
    """G(n, p) resampled until connected."""
    _require(n >= 1, "random graph needs at least one vertex")
    _require(0.0 <= p <= 1.0, f"edge probability {p} outside [0, 1]")
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(max_attempts):
        keep = rng.random(len(iu)) < p
        g = Graph.from_edges(n, np.stack([iu[keep], ju[keep]], axis=1))
        if is_connected(g):
            return g
    raise GeneratorSpecError(
        f"no connected G({n}, {p}) after {max_attempts} attempts; raise p"
    )


def block_graph(blocks: int, rng: np.random.Generator, max_clique: int = 4) -> Graph:
    """Cliques of 2..max_clique vertices, each glued to the graph at one existing cut vertex."""
    _require(blocks >= 1, "block graph needs at least one block")
    _require(max_clique >= 2, "cliques need at least two vertices")
    n = 0
    edges: list[tuple[int, int]] = []
    for b in range(blocks):
        size = int(rng.integers(2, max_clique + 1))
        if b == 0:
            members = list(range(size))
            n = size
        else:
            anchor = int(rng.integers(0, n))
            members = [anchor, *range(n, n + size - 1)]
            n += size - 1
        edges.extend((members[i], members[j]) for i in range(size) for j in range(i + 1, size))
    return Graph.from_edges(n, edges)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GeneratorSpecError(message)
