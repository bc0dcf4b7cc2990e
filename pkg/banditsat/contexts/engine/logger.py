"""
Engine context logger.

Provides logging interface for the engine context with automatic [engine] prefix.
All engine modules should import from this module, not from loguru directly.
Propagation and conflict analysis never log.
"""

import sys
from pathlib import Path
from typing import Optional, TextIO

from loguru import logger

from banditsat.utils.logger import setup_logger as _setup_logger

CONTEXT_PREFIX = "[engine]"


def setup_engine_logger(
    log_dir: Path,
    console: TextIO = sys.stderr,
    extra: Optional[dict] = None,
    console_level: str = "INFO",
) -> Path:
    """
    Setup logger for a single solve session.

    Console output defaults to stderr since stdout carries the solver report.
    """
    return _setup_logger(
        context_name="engine",
        log_dir=log_dir,
        extra_provenance=extra,
        console=console,
        console_level=console_level,
    )


def _log_info(message: str) -> None:
    """Log info message with [engine] prefix."""
    logger.info(f"{CONTEXT_PREFIX} {message}")


def _log_success(message: str) -> None:
    """Log success message with [engine] prefix."""
    logger.success(f"{CONTEXT_PREFIX} {message}")


def _log_warning(message: str) -> None:
    """Log warning message with [engine] prefix."""
    logger.warning(f"{CONTEXT_PREFIX} {message}")


def _log_error(message: str) -> None:
    """Log error message with [engine] prefix."""
    logger.error(f"{CONTEXT_PREFIX} {message}")


def _log_debug(message: str) -> None:
    """Log debug message with [engine] prefix."""
    logger.debug(f"{CONTEXT_PREFIX} {message}")


def log_solve_start(num_vars: int, num_clauses: int, descriptor: str, seed: int) -> None:
    """Log start of a solve with instance size and policy."""
    _log_info(f"Solving {num_vars} variables, {num_clauses} clauses")
    _log_debug(f"  Policy: {descriptor}")
    _log_debug(f"  Seed: {seed}")


def log_solve_result(verdict: str, stats) -> None:
    """
    Log the verdict and headline counters.

    Args:
        verdict: Verdict value (SAT/UNSAT/INDET)
        stats: RunStats of the finished run
    """
    summary = (
        f"{stats.conflicts} conflicts, {stats.decisions} decisions, "
        f"{stats.restarts} restarts, {stats.resets} resets ({stats.elapsed_s:.3f}s)"
    )
    if verdict == "INDET":
        _log_warning(f"Budget exhausted: {summary}")
    else:
        _log_success(f"{verdict}: {summary}")
    _log_debug(
        f"  Learned {stats.learned_clauses}, deleted {stats.deleted_clauses}, "
        f"propagations {stats.propagations}"
    )
