# Path and File Name : gp_engine/config.py
# Author: gp_engine maintainers
# Details of functionality of this file: Configuration management using environment variables only

"""
Configuration management for gp_engine.
All configuration via environment variables; CLI flags override per run.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import ConfigError

DEFAULT_BENCH_TABLE = Path(__file__).resolve().parent / "bench" / "table1.yaml"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Config:
    """gp_engine configuration."""

    # Harness parallelism
    threads: int

    # Logging
    log_level: str
    log_dir: Optional[Path]

    # Benchmark inputs
    bench_table_path: Path
    fullerene_dir: Optional[Path]

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables."""

        raw_threads = os.environ.get("GP_SOLVE_THREADS", "1")
        try:
            threads = int(raw_threads)
        except ValueError:
            raise ConfigError(f"GP_SOLVE_THREADS must be an integer, got {raw_threads!r}") from None
        if threads < 1:
            raise ConfigError(f"GP_SOLVE_THREADS must be >= 1, got {threads}")

        log_level = os.environ.get("GP_ENGINE_LOG_LEVEL", "INFO").upper()
        if log_level not in LOG_LEVELS:
            raise ConfigError(f"GP_ENGINE_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}")

        log_dir_str = os.environ.get("GP_ENGINE_LOG_DIR")
        log_dir = Path(log_dir_str) if log_dir_str else None

        bench_table_path = Path(os.environ.get("GP_BENCH_TABLE", str(DEFAULT_BENCH_TABLE)))

        fullerene_dir_str = os.environ.get("GP_FULLERENE_DIR")
        fullerene_dir = Path(fullerene_dir_str) if fullerene_dir_str else None

        if log_dir is not None:
            log_dir.mkdir(parents=True, exist_ok=True)

        return cls(
            threads=threads,
            log_level=log_level,
            log_dir=log_dir,
            bench_table_path=bench_table_path,
            fullerene_dir=fullerene_dir,
        )
