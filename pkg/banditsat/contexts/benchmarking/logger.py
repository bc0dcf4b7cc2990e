"""
Benchmarking context logger.

Provides logging interface for the benchmarking context with automatic [bench] prefix.
All benchmarking modules should import from this module, not from loguru directly.
"""

from pathlib import Path
from typing import Sequence

from loguru import logger

from banditsat.utils.logger import setup_logger as _setup_logger

CONTEXT_PREFIX = "[bench]"


def setup_bench_logger(log_dir: Path, policies: Sequence[str], jobs: int) -> Path:
    """
    Setup logger for a batch session.

    Args:
        log_dir: Directory for this batch session
        policies: Policy descriptors of the batch
        jobs: Worker count

    Returns:
        Path to log file
    """
    return _setup_logger(
        context_name="bench",
        log_dir=log_dir,
        extra_provenance={"Policies": ", ".join(policies), "Jobs": jobs},
    )


def _log_info(message: str) -> None:
    """Log info message with [bench] prefix."""
    logger.info(f"{CONTEXT_PREFIX} {message}")


def _log_success(message: str) -> None:
    """Log success message with [bench] prefix."""
    logger.success(f"{CONTEXT_PREFIX} {message}")


def _log_warning(message: str) -> None:
    """Log warning message with [bench] prefix."""
    logger.warning(f"{CONTEXT_PREFIX} {message}")


def _log_error(message: str) -> None:
    """Log error message with [bench] prefix."""
    logger.error(f"{CONTEXT_PREFIX} {message}")


def _log_debug(message: str) -> None:
    """Log debug message with [bench] prefix."""
    logger.debug(f"{CONTEXT_PREFIX} {message}")


def log_batch_start(directory: Path, instances: int, tasks: int, skipped: int) -> None:
    _log_info(f"Batch over {directory}: {instances} instances, {tasks} runs")
    if skipped:
        _log_info(f"Resuming: {skipped} runs already recorded")


def log_batch_result(summaries) -> None:
    """
    Log per-policy results of a finished batch.

    Args:
        summaries: PolicySummary list from summarize_records()
    """
    for s in summaries:
        _log_success(
            f"{s.policy}: solved {s.solved}/{s.runs} (SAT {s.sat}, UNSAT {s.unsat}), "
            f"PAR-2 {s.par2:.3f}s"
        )
        if s.errors:
            _log_warning(f"{s.policy}: {s.errors} runs failed")
