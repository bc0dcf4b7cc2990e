"""Timestamp and wall-clock budget helpers."""

import time
from datetime import datetime
from typing import Optional


def now_exact() -> str:
    """Get current timestamp in ISO 8601 format."""
    return datetime.now().isoformat()


def now() -> str:
    """Get current timestamp in filesystem-safe detailed format."""
    return datetime.now().strftime("%Y%m%d_%H%M%S")


class Deadline:
    """
    Wall-clock budget measured from construction.

    A limit of None never expires. `elapsed()` uses a monotonic clock so it is
    safe against system clock adjustments.
    """

    def __init__(self, limit_s: Optional[float] = None):
        self.limit_s = limit_s
        self._start = time.perf_counter()

    def elapsed(self) -> float:
        return time.perf_counter() - self._start

    def expired(self) -> bool:
        return self.limit_s is not None and self.elapsed() >= self.limit_s
