"""Run configuration and graph loading (edge-list files or generator specs).

Generator specs::

    path:N  cycle:N  star:LEAVES  complete:N  tree:N
    grid:RxC  random:N,P  block:BLOCKS[,MAX_CLIQUE]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hyperecc.config import Settings
from hyperecc.errors import GeneratorSpecError
from hyperecc.graph import Graph, IntArray, largest_component, read_edge_list
from hyperecc.graph import generators as gen
from hyperecc.logging import bind_run, get_logger

log = get_logger(__name__)

_SPEC_RE = re.compile(r"^(?P<kind>[a-z]+):(?P<args>.+)$")


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: str
    input: Path | None = None
    gen: str | None = None
    root: int | None = Field(default=None, ge=0)
    start: int = Field(default=0, ge=0)
    delta: int | None = Field(default=None, ge=0)
    rho: int | None = Field(default=None, ge=0)
    sample: int = Field(default=0, ge=0)
    seed: int | None = None
    budget: int | None = Field(default=None, ge=0)
    force: bool = False
    pretty: bool = False
    out: Path | None = None

    @model_validator(mode="after")
    def _one_source(self) -> RunConfig:
        if self.input is not None and self.gen is not None:
            raise ValueError("--input and --gen are mutually exclusive")
        if self.input is None and self.gen is None and self.command != "verify":
            raise ValueError(f"{self.command} needs --input or --gen")
        return self

    def apply(self, settings: Settings) -> Settings:
        """Settings with this run's flag overrides."""
        update: dict[str, object] = {}
        if self.budget is not None:
            update["oracle_budget"] = self.budget
        if self.force:
            update["force"] = True
        if self.seed is not None:
            update["seed"] = self.seed
        if self.sample:
            update["distance_sample"] = self.sample
        return settings.model_copy(update=update)


@dataclass(frozen=True, eq=False)
class LoadedGraph:
    name: str
    graph: Graph
    retained: IntArray
    original_n: int
    components: int


def generate(spec: str, seed: int) -> Graph:
    """Build the graph described by a generator spec (random families use ``seed``)."""
    match = _SPEC_RE.match(spec.strip())
    if match is None:
        raise GeneratorSpecError(f"malformed generator spec {spec!r}")
    kind, args = match["kind"], match["args"]
    rng = np.random.default_rng(seed)
    try:
        if kind == "path":
            return gen.path_graph(int(args))
        if kind == "cycle":
            return gen.cycle_graph(int(args))
        if kind == "star":
            return gen.star_graph(int(args))
        if kind == "complete":
            return gen.complete_graph(int(args))
        if kind == "tree":
            return gen.random_tree(int(args), rng)
        if kind == "grid":
            rows, _, cols = args.partition("x")
            return gen.grid_graph(int(rows), int(cols))
        if kind == "random":
            n, _, p = args.partition(",")
            return gen.random_connected_graph(int(n), float(p), rng)
        if kind == "block":
            blocks, _, size = args.partition(",")
            return gen.block_graph(int(blocks), rng, int(size) if size else 4)
    except ValueError as exc:
        raise GeneratorSpecError(f"bad arguments in {spec!r}: {exc}") from exc
    raise GeneratorSpecError(f"unknown generator {kind!r}")


def load_graph(config: RunConfig, settings: Settings) -> LoadedGraph:
    """Read or generate the input, reduced to its largest connected component."""
    if config.input is not None:
        g = read_edge_list(config.input)
        name = config.input.name
    elif config.gen is not None:
        g = generate(config.gen, settings.seed)
        name = config.gen
    else:
        raise ValueError("no input graph configured")
    bind_run(graph=name)
    selection = largest_component(g)
    return LoadedGraph(
        name=name,
        graph=selection.graph,
        retained=selection.retained,
        original_n=g.n,
        components=selection.components,
    )
