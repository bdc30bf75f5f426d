"""Edge-list ingestion (SNAP / KONECT style) and the canonical serializer."""

from __future__ import annotations

import gzip
from collections.abc import Iterable
from pathlib import Path

from hyperecc.errors import GraphParseError
from hyperecc.graph.model import Graph
from hyperecc.logging import get_logger

log = get_logger(__name__)

COMMENT_MARKERS = ("#", "%")


def _lines(source: str | bytes | Iterable[str] | Iterable[bytes]) -> Iterable[str]:
    if isinstance(source, bytes):
        return source.decode("utf-8").splitlines()
    if isinstance(source, str):
        return source.splitlines()
    return (line.decode("utf-8") if isinstance(line, bytes) else line for line in source)


def parse_edge_list(source: str | bytes | Iterable[str] | Iterable[bytes]) -> Graph:
    """Parse whitespace-separated ``u v`` lines; extra columns (weights, timestamps) are ignored.

    Labels are mapped to contiguous ids in order of first appearance.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_MARKERS):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise GraphParseError(f"expected two vertex tokens, got {line!r}", line=lineno)
        u = ids.setdefault(tokens[0], len(ids))
        v = ids.setdefault(tokens[1], len(ids))
        edges.append((u, v))
    if not edges:
        raise GraphParseError("no edges")
    g = Graph.from_edges(len(ids), edges, labels=list(ids))
    log.info("graph.parsed", n=g.n, m=g.edge_count, lines=len(edges))
    return g


def read_edge_list(path: str | Path) -> Graph:
    path = Path(path)
    if path.suffix == ".gz":
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            return parse_edge_list(fh)
    with path.open(encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph) -> str:
    """One ``u v`` line per edge (u < v by id, ascending), using labels when present."""
    return "".join(f"{g.label(u)} {g.label(v)}\n" for u, v in g.edges().tolist())
