"""
Formula context logger.

Provides logging interface for the formula context with automatic [formula] prefix.
All formula modules should import from this module, not from loguru directly.
"""

from loguru import logger

CONTEXT_PREFIX = "[formula]"


def _log_info(message: str) -> None:
    """Log info message with [formula] prefix."""
    logger.info(f"{CONTEXT_PREFIX} {message}")


def _log_warning(message: str) -> None:
    """Log warning message with [formula] prefix."""
    logger.warning(f"{CONTEXT_PREFIX} {message}")


def _log_debug(message: str) -> None:
    """Log debug message with [formula] prefix."""
    logger.debug(f"{CONTEXT_PREFIX} {message}")
