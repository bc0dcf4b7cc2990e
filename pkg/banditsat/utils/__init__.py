"""
Shared utilities for banditsat.

- Tier 1 loguru setup with provenance
- Tier 2 JSON Lines batch events
- Timestamps and wall-clock budgets
"""

from banditsat.utils.timing import Deadline, now, now_exact

__all__ = ["Deadline", "now", "now_exact"]
