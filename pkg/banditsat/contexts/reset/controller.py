"""
Restart-boundary orchestration.

At every boundary the controller closes the window, credits the arm pulled at
the previous boundary, updates the EMA, clears the trail, asks the policy for the
next arm and carries out the resulting action on the activity table.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

from banditsat.contexts.bandit import (
    BanditPolicy,
    BaselinePolicy,
    FixedProbabilityPolicy,
    SWUCBPolicy,
    ThompsonPolicy,
)
from banditsat.contexts.engine.config import PartialK, PolicySpec, SolverConfig
from banditsat.contexts.reset.actions import ResetAction, execute, resolve_reset_action
from banditsat.contexts.reset.logger import log_boundary
from banditsat.contexts.reset.rewards import RewardTracker, classify
from banditsat.contexts.reset.trace import WindowRecord

if TYPE_CHECKING:
    from banditsat.contexts.engine.solver import Solver


def build_policy(spec: PolicySpec) -> BanditPolicy:
    if spec.kind == "fixed":
        return FixedProbabilityPolicy(spec.probability)
    if spec.kind == "thompson":
        return ThompsonPolicy(decay_enabled=spec.decay_enabled, d=spec.decay)
    if spec.kind == "swucb":
        return SWUCBPolicy(window_size=spec.window, c=spec.explore)
    return BaselinePolicy()


class ResetController:
    """
    Boundary hook plugged into the solver.

    Attributes:
        policy: Bandit policy choosing Restart or Reset
        tracker: Window counters, EMA and pending arm
        partial_k: None (full reset), k, or ALL
        flip_success: Reverse the success comparison
        windows: One WindowRecord per boundary so far
        credit_events: Number of times an arm was credited
    """

    def __init__(
        self,
        policy: BanditPolicy,
        tracker: Optional[RewardTracker] = None,
        partial_k: PartialK = None,
        flip_success: bool = False,
    ):
        self.policy = policy
        self.tracker = tracker or RewardTracker()
        self.partial_k = partial_k
        self.flip_success = flip_success
        self.windows: list[WindowRecord] = []
        self.credit_events = 0

    @classmethod
    def from_config(cls, config: SolverConfig) -> ResetController:
        return cls(
            policy=build_policy(config.policy),
            tracker=RewardTracker(ema_decay=config.ema_decay),
            partial_k=config.partial_k,
            flip_success=config.flip_success,
        )

    def on_restart_boundary(self, solver: Solver) -> ResetAction:
        stats = solver.stats
        tracker = self.tracker

        rw = tracker.close_window(stats.decisions, stats.learned_clauses)

        ema_before = tracker.ema if tracker.windows_seen else None
        credited = tracker.pending_arm
        success = None
        if credited is not None:
            success = classify(rw, tracker.ema, self.flip_success)
            self.policy.credit(credited, success)
            self.credit_events += 1
            tracker.pending_arm = None

        ema_after = tracker.update_ema(rw)

        solver.cancel_until(0)

        arm = self.policy.select(solver.rng)
        tracker.pending_arm = arm
        action = resolve_reset_action(arm, self.partial_k, solver.num_vars)
        execute(action, solver.activity, solver.rng)

        stats.restarts += 1
        if action.is_reset:
            stats.resets += 1
        stats.rw_glr_trace.append(rw)

        record = WindowRecord(
            window=len(self.windows) + 1,
            arm=credited.value if credited is not None else None,
            rw_glr=rw,
            ema_before=ema_before,
            ema_after=ema_after,
            success=success,
            action=str(action),
        )
        self.windows.append(record)
        log_boundary(record, stats.restarts, stats.resets)

        tracker.open_window(stats.decisions, stats.learned_clauses)
        return action
