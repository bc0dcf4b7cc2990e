"""Run statistics and solve results."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from banditsat.contexts.formula import Outcome, Verdict

COUNTER_FIELDS = (
    "conflicts",
    "decisions",
    "propagations",
    "restarts",
    "resets",
    "learned_clauses",
    "deleted_clauses",
)


@dataclass
class RunStats:
    """
    Counters of one solver run. All counters only grow; resets <= restarts.

    `decision_trace` and `conflict_levels` are filled only when the run records its
    search trace: every decision as a signed DIMACS literal, and the decision level
    at which each conflict occurred.
    """

    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    resets: int = 0
    learned_clauses: int = 0
    deleted_clauses: int = 0
    rw_glr_trace: list[float] = field(default_factory=list)
    elapsed_s: float = 0.0
    decision_trace: list[int] = field(default_factory=list)
    conflict_levels: list[int] = field(default_factory=list)

    def counters(self) -> dict[str, int]:
        """Deterministic counters only (no timing)."""
        return {name: getattr(self, name) for name in COUNTER_FIELDS}

    def rw_glr_summary(self) -> dict[str, Any]:
        if not self.rw_glr_trace:
            return {"windows": 0, "mean": None, "min": None, "max": None, "last": None}
        trace = np.asarray(self.rw_glr_trace, dtype=float)
        return {
            "windows": int(trace.size),
            "mean": float(trace.mean()),
            "min": float(trace.min()),
            "max": float(trace.max()),
            "last": float(trace[-1]),
        }


@dataclass
class SolveResult:
    """Outcome of a solve plus its statistics and per-window reset trace."""

    outcome: Outcome
    stats: RunStats
    windows: list = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        return self.outcome.verdict

    @property
    def model(self):
        return self.outcome.model
