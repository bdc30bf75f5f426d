"""Largest connected component extraction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components

from hyperecc.graph.model import Graph, IntArray
from hyperecc.logging import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ComponentSelection:
    graph: Graph
    retained: IntArray  # retained[i] is the id in the input graph of new vertex i
    components: int

    @property
    def is_identity(self) -> bool:
        return self.components <= 1


def component_labels(g: Graph) -> tuple[int, IntArray]:
    count, labels = connected_components(g.csr, directed=False)
    return int(count), np.asarray(labels, dtype=np.int64)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and component_labels(g)[0] == 1


def largest_component(g: Graph) -> ComponentSelection:
    """Induced subgraph on the largest component; ties go to the component holding the smallest id."""
    count, labels = component_labels(g)
    if count <= 1:
        return ComponentSelection(g, np.arange(g.n, dtype=np.int64), count)
    sizes = np.bincount(labels, minlength=count)
    smallest = np.full(count, g.n, dtype=np.int64)
    np.minimum.at(smallest, labels, np.arange(g.n, dtype=np.int64))
    tied = np.flatnonzero(sizes == sizes.max())
    best = int(tied[np.argmin(smallest[tied])])
    retained = np.flatnonzero(labels == best).astype(np.int64)
    log.warning(
        "graph.reduced_to_component",
        components=count,
        kept=len(retained),
        dropped=g.n - len(retained),
    )
    return ComponentSelection(g.induced_subgraph(retained), retained, count)
