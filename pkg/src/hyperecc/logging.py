"""Structured logging on stderr; stdout carries only the TSV tables.

Console rendering by default, JSON lines with ``HYPERECC_LOG_JSON=true``. A run
binds ``command`` and ``graph`` as context variables; every later event carries them.
"""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager

import structlog


def configure_logging(level: str = "INFO", json_logs: bool = False) -> None:
    """Configure structlog + stdlib logging once at process start."""
    log_level = getattr(logging, level.upper(), logging.INFO)

    shared_processors: list[structlog.typing.Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
    ]
    if json_logs:
        shared_processors.append(structlog.processors.format_exc_info)
        renderer: structlog.typing.Processor = structlog.processors.JSONRenderer()
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())

    structlog.configure(
        processors=[*shared_processors, renderer],
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        # module-level proxies must follow a later reconfigure
        cache_logger_on_first_use=False,
    )
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=log_level)


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)  # type: ignore[no-any-return]


def bind_run(**fields: object) -> None:
    """Attach ``fields`` to every later event of this run (or thread)."""
    structlog.contextvars.bind_contextvars(**fields)


def clear_run() -> None:
    structlog.contextvars.clear_contextvars()


@contextmanager
def timed(event: str, **fields: object) -> Iterator[dict[str, object]]:
    """Log ``event`` with ``seconds`` on exit; the yielded dict adds fields."""
    extra: dict[str, object] = {}
    started = time.perf_counter()
    try:
        yield extra
    finally:
        get_logger("hyperecc.timing").info(
            event, seconds=round(time.perf_counter() - started, 3), **fields, **extra
        )
