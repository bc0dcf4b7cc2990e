"""
Reset context logger.

Provides logging interface for the reset context with automatic [reset] prefix.
All reset modules should import from this module, not from loguru directly.
"""

from loguru import logger

CONTEXT_PREFIX = "[reset]"


def _log_info(message: str) -> None:
    """Log info message with [reset] prefix."""
    logger.info(f"{CONTEXT_PREFIX} {message}")


def _log_debug(message: str) -> None:
    """Log debug message with [reset] prefix."""
    logger.debug(f"{CONTEXT_PREFIX} {message}")


def log_boundary(record, restarts: int, resets: int) -> None:
    """
    Log one restart boundary at DEBUG.

    Args:
        record: WindowRecord of the window just closed
        restarts: Restart count after this boundary
        resets: Reset count after this boundary
    """
    credited = f", credit {record.arm}={'success' if record.success else 'failure'}" if record.arm else ""
    _log_debug(
        f"Boundary {record.window}: rw_glr={record.rw_glr:.4f} ema={record.ema_after:.4f}"
        f"{credited} -> {record.action} (restarts={restarts}, resets={resets})"
    )
