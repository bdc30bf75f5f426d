"""Shared pytest fixtures."""

from __future__ import annotations

from collections.abc import Iterator

import pytest
import structlog

from hyperecc.config import Settings
from hyperecc.graph import Graph
from hyperecc.graph import generators as gen


@pytest.fixture(autouse=True)
def _reset_structlog() -> Iterator[None]:
    """CLI tests point structlog at a captured stderr; undo that after each test."""
    yield
    structlog.contextvars.clear_contextvars()
    structlog.reset_defaults()


@pytest.fixture
def settings() -> Settings:
    """Settings isolated from any real .env / environment."""
    return Settings(
        _env_file=None,  # type: ignore[call-arg]
        verify_random_graphs=5,
        verify_max_n=15,
    )


@pytest.fixture
def p5() -> Graph:
    """0-1-2-3-4."""
    return gen.path_graph(5)


@pytest.fixture
def c6() -> Graph:
    return gen.cycle_graph(6)


@pytest.fixture
def c4() -> Graph:
    return gen.cycle_graph(4)


@pytest.fixture
def star() -> Graph:
    """K1,4 with the hub at 0."""
    return gen.star_graph(4)


@pytest.fixture
def grid() -> Graph:
    """3x4 grid, vertex r*4 + c."""
    return gen.grid_graph(3, 4)
