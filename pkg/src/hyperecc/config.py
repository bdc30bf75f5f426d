"""Typed runtime configuration, loaded from environment variables / .env.

All settings use the ``HYPERECC_`` prefix, e.g. ``HYPERECC_ORACLE_BUDGET``.
Command-line flags override individual fields for a single invocation.
"""

from __future__ import annotations

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict

# Library defaults; Settings mirrors them so env/.env can override per process.
ORACLE_BUDGET = 5_000_000_000  # n·m edge-visits
QUADRUPLE_BUDGET = 120  # largest n for the O(n⁴) four-point enumeration
POWER_BUDGET = 50_000_000  # stored ball entries across all vertices
BITMAP_MAX_N = 65_536
APSP_CHUNK_ROWS = 256


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="HYPERECC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # --- Guards for the quadratic / quartic oracles ------------------------
    oracle_budget: int = ORACLE_BUDGET
    quadruple_budget: int = QUADRUPLE_BUDGET
    power_budget: int = POWER_BUDGET
    force: bool = False  # ignore every budget guard

    # --- Hyperbolicity sampling (large inputs only) ----------------------
    hyperbolicity_sample_size: int = 64
    hyperbolicity_sample_rounds: int = 8

    # --- Distance sweep --------------------------------------------------
    bitmap_max_n: int = BITMAP_MAX_N
    apsp_chunk_rows: int = APSP_CHUNK_ROWS
    workers: int = 1  # thread pool for BFS row chunks and quadruple partitions
    distance_sample: int = 0  # 0 = compare every source row
    debug_checks: bool = False  # spot-check estimator contracts during sweeps

    # --- Generators / property suite -------------------------------------
    seed: int = 20180917
    verify_random_graphs: int = 200
    verify_min_n: int = 5
    verify_max_n: int = 40

    # --- Runtime ---------------------------------------------------------
    log_level: str = "INFO"
    log_json: bool = False


@lru_cache
def get_settings() -> Settings:
    """Return the process-wide settings singleton."""
    return Settings()
