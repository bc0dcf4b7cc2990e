"""
Synthetic Bernoulli environment for exercising bandit policies.

Arm means are given in ARMS order: (restart_mean, reset_mean). A drift schedule
lists (step, new_means) pairs; from that step on the new means apply.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from banditsat.contexts.bandit.policies import ARMS, Arm, BanditPolicy

Means = tuple[float, float]


@dataclass
class SimulationResult:
    choices: list[Arm] = field(default_factory=list)
    rewards: list[float] = field(default_factory=list)

    @property
    def cumulative_reward(self) -> float:
        return float(sum(self.rewards))

    def arm_fraction(self, arm: Arm, start: int = 0, end: Optional[int] = None) -> float:
        """Share of steps in [start, end) that selected `arm`."""
        window = self.choices[start:end]
        if not window:
            return 0.0
        return sum(1 for c in window if c is arm) / len(window)


def _check_means(means: Sequence[float]) -> Means:
    if len(means) != 2 or not all(0.0 <= m <= 1.0 for m in means):
        raise ValueError(f"expected two arm means in [0, 1], got {means}")
    return float(means[0]), float(means[1])


def simulate_bernoulli_env(
    policy: BanditPolicy,
    arm_means: Sequence[float],
    horizon: int,
    rng: np.random.Generator,
    drift: Optional[Sequence[tuple[int, Sequence[float]]]] = None,
) -> SimulationResult:
    """
    Run `horizon` select/credit rounds against Bernoulli arms.

    Each round the policy picks an arm, a reward is drawn with that arm's current
    mean, and the policy is credited with success = (reward == 1).
    """
    means = _check_means(arm_means)
    schedule = sorted((int(step), _check_means(m)) for step, m in (drift or []))
    result = SimulationResult()

    for step in range(horizon):
        while schedule and schedule[0][0] <= step:
            means = schedule.pop(0)[1]
        arm = policy.select(rng)
        reward = 1.0 if rng.random() < means[ARMS.index(arm)] else 0.0
        policy.credit(arm, reward == 1.0)
        result.choices.append(arm)
        result.rewards.append(reward)

    return result


def steps_to_recover(
    choices: Sequence[Arm],
    best_arm: Arm,
    start: int,
    window: int = 50,
    threshold: float = 0.8,
) -> Optional[int]:
    """
    Steps after `start` until a trailing `window` of choices first selects
    `best_arm` at least `threshold` of the time.

    The trailing window only counts choices made at or after `start`. Returns the
    offset (relative to `start`) of the step completing the first qualifying
    window, or None if it never happens.
    """
    hits = np.fromiter((c is best_arm for c in choices[start:]), dtype=float)
    if hits.size < window:
        return None
    rolling = np.convolve(hits, np.ones(window), mode="valid") / window
    qualifying = np.flatnonzero(rolling >= threshold)
    if qualifying.size == 0:
        return None
    return int(qualifying[0]) + window
