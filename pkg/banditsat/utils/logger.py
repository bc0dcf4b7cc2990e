"""
Generic logger setup utilities for Tier 1 (detailed) logging.

Provides reusable loguru configuration with provenance tracking.
Context-specific wrappers are defined in contexts/{context}/logger.py.
"""

import os
import sys
from pathlib import Path
from typing import Optional, TextIO

from dotenv import load_dotenv
from loguru import logger

from banditsat.utils.timing import now

load_dotenv()
LOGS_PATH = Path(os.getenv("LOGS_PATH", "outs/logs"))

RULE = "-" * 72
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <7} | {message}"
CONSOLE_FORMAT = "{time:HH:mm:ss} | <level>{level: <7}</level> | <level>{message}</level>"

LEVEL_COLORS = {
    "WARNING": "<yellow>",
    "ERROR": "<red>",
    "CRITICAL": "<bold><red>",
}


def session_log_dir(phase: str, base: Optional[Path] = None) -> Path:
    """Return `{base}/{phase}_{timestamp}` without creating it."""
    return (base or LOGS_PATH) / f"{phase}_{now()}"


def setup_logger(
    context_name: str,
    log_dir: Path,
    extra_provenance: Optional[dict] = None,
    level_colors: Optional[dict] = None,
    console: TextIO = sys.stdout,
    console_level: str = "INFO",
) -> Path:
    """
    Configure loguru for a context with provenance tracking.

    The file sink records DEBUG and up, the console sink `console_level` and up.
    The provenance block (see `provenance`) opens every log file.

    Args:
        context_name: Context identifier (e.g., "engine", "bench")
        log_dir: Directory for this logging session
        extra_provenance: Additional key-value pairs for provenance header
        level_colors: Override default level colors (e.g., {"INFO": "<cyan>"})
        console: Stream for the console sink. The solve command passes sys.stderr
                 because stdout carries the solver report.
        console_level: Minimum level shown on the console

    Returns:
        Path to log file

    Example:
        from banditsat.utils.logger import setup_logger

        log_file = setup_logger(
            context_name="bench",
            log_dir=Path("outs/logs/batch_20251114_123456"),
            extra_provenance={"Policies": "baseline, thompson-decay"},
        )
    """
    log_dir.mkdir(exist_ok=True, parents=True)
    log_file = log_dir / f"{context_name}.log"

    logger.remove()

    colors = {**LEVEL_COLORS, **(level_colors or {})}
    for level_name, color in colors.items():
        logger.level(level_name, color=color)

    logger.add(log_file, format=FILE_FORMAT, level="DEBUG")
    logger.add(
        console,
        format=CONSOLE_FORMAT,
        level=console_level,
        colorize=console.isatty() if hasattr(console, "isatty") else False,
    )

    log_provenance(extra_provenance)

    return log_file


def provenance(extra_context: Optional[dict] = None) -> dict[str, str]:
    """Invocation, interpreter and library versions, then `extra_context` in order."""
    import numpy

    from banditsat import __version__

    entries = {
        "Command": " ".join(sys.argv),
        "Working directory": str(Path.cwd()),
        "Python": sys.version.split()[0],
        "banditsat": __version__,
        "numpy": numpy.__version__,
    }
    entries.update({str(k): str(v) for k, v in (extra_context or {}).items()})
    return entries


def log_provenance(extra_context: Optional[dict] = None) -> None:
    """Write the provenance block between two rules, keys padded to one column."""
    entries = provenance(extra_context)
    width = max(len(key) for key in entries)
    logger.info(RULE)
    for key, value in entries.items():
        logger.info(f"{key + ':':<{width + 1}} {value}")
    logger.info(RULE)
