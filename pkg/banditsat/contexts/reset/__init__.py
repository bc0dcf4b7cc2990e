"""
Reset Context

Responsibilities:
- Restart-window learning rate (rw_glr), its EMA and success classification
- Crediting the previously pulled arm and asking the policy for the next one
- Full and k-partial resets of the activity table
- Per-window trace records and their CSV form

Owns: the restart boundary (engine calls it through the boundary hook)
Never: Touches learnt clauses, saved phases or the Luby index
"""

from banditsat.contexts.reset.actions import (
    ResetAction,
    ResetKind,
    execute,
    full_reset,
    partial_reset,
    resolve_reset_action,
)
from banditsat.contexts.reset.controller import ResetController, build_policy
from banditsat.contexts.reset.rewards import RewardTracker, classify, rw_glr
from banditsat.contexts.reset.trace import TRACE_COLUMNS, WindowRecord, write_window_trace

__all__ = [
    # Rewards
    "rw_glr",
    "classify",
    "RewardTracker",
    # Actions
    "ResetAction",
    "ResetKind",
    "resolve_reset_action",
    "full_reset",
    "partial_reset",
    "execute",
    # Orchestration
    "ResetController",
    "build_policy",
    # Trace
    "WindowRecord",
    "TRACE_COLUMNS",
    "write_window_trace",
]
