"""
Reset actions on the activity table.

A full reset draws every activity uniformly from [0, 1), which makes the branching
order a uniformly random permutation. A k-partial reset does the same but first
records the top-k variables and then lifts them to 1 + (k - j) * 0.5 / k (rank j),
above every random draw and in their previous relative order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Optional

import numpy as np

from banditsat.contexts.bandit import Arm
from banditsat.contexts.engine.config import ALL, PartialK

if TYPE_CHECKING:
    from banditsat.contexts.engine.activity import ActivityTable


class ResetKind(str, Enum):
    RESTART = "restart"
    FULL = "full"
    PARTIAL = "partial"


@dataclass(frozen=True)
class ResetAction:
    kind: ResetKind
    k: Optional[int] = None

    @classmethod
    def restart(cls) -> ResetAction:
        return cls(ResetKind.RESTART)

    @classmethod
    def full(cls) -> ResetAction:
        return cls(ResetKind.FULL)

    @classmethod
    def partial(cls, k: int) -> ResetAction:
        """k-partial reset; k = 0 is a full reset."""
        if k < 0:
            raise ValueError(f"partial reset needs k >= 0, got {k}")
        return cls.full() if k == 0 else cls(ResetKind.PARTIAL, k)

    @property
    def is_reset(self) -> bool:
        return self.kind is not ResetKind.RESTART

    def __str__(self) -> str:
        return f"partial(k={self.k})" if self.kind is ResetKind.PARTIAL else self.kind.value


def resolve_reset_action(arm: Arm, partial_k: PartialK, num_vars: int) -> ResetAction:
    """
    Translate the selected arm into an action.

    Reset with partial_k None (or 0) is a full reset. partial_k = ALL, or any
    k >= num_vars, keeps the whole order and so degenerates to a plain restart.
    """
    if arm is Arm.RESTART:
        return ResetAction.restart()
    if partial_k is None:
        return ResetAction.full()
    if partial_k == ALL or partial_k >= num_vars:
        return ResetAction.restart()
    return ResetAction.partial(partial_k)


def full_reset(activities: ActivityTable, rng: np.random.Generator) -> None:
    """Randomize every activity in [0, 1) and reset the bump increment to 1."""
    activities.set_activities(rng.random(activities.num_vars), bump_increment=1.0)


def partial_reset(activities: ActivityTable, k: int, rng: np.random.Generator) -> None:
    """
    Randomize all activities but keep the top-k variables first, in their old order.

    With k >= num_vars the whole previous order is reproduced.
    """
    if k < 1:
        raise ValueError(f"partial reset needs k >= 1, got {k}")
    top = activities.top(k)
    values = rng.random(activities.num_vars)
    epsilon = 0.5 / k
    for rank, var in enumerate(top, start=1):
        values[var - 1] = 1.0 + (k - rank) * epsilon
    activities.set_activities(values, bump_increment=1.0)


def execute(action: ResetAction, activities: ActivityTable, rng: np.random.Generator) -> None:
    if action.kind is ResetKind.FULL:
        full_reset(activities, rng)
    elif action.kind is ResetKind.PARTIAL:
        partial_reset(activities, action.k, rng)
