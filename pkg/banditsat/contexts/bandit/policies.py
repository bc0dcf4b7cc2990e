"""
Two-arm bandit policies for the restart-vs-reset decision.

Every policy exposes the same surface:
    select(rng) -> Arm       choose the action for the coming restart window
    credit(arm, success)     feed back the binary outcome of a finished window

Randomness always comes from the caller's numpy Generator, so a policy is a
deterministic function of (seed, credit history). Ties favor Restart.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from banditsat.contexts.bandit.beta import sample_beta


class Arm(str, Enum):
    RESTART = "restart"
    RESET = "reset"


ARMS = (Arm.RESTART, Arm.RESET)


def pick_larger(restart_value: float, reset_value: float) -> Arm:
    """Argmax over the two arms; exact ties go to Restart."""
    return Arm.RESET if reset_value > restart_value else Arm.RESTART


class BanditPolicy(ABC):
    """Common interface of all reset policies."""

    @abstractmethod
    def select(self, rng: np.random.Generator) -> Arm: ...

    @abstractmethod
    def credit(self, arm: Arm, success: bool) -> None: ...

    @property
    @abstractmethod
    def descriptor(self) -> str: ...


class BaselinePolicy(BanditPolicy):
    """Never resets. Consumes no randomness."""

    def select(self, rng: np.random.Generator) -> Arm:
        return Arm.RESTART

    def credit(self, arm: Arm, success: bool) -> None:
        pass

    @property
    def descriptor(self) -> str:
        return "baseline"


@dataclass
class FixedProbabilityPolicy(BanditPolicy):
    """Reset with constant probability p at every boundary."""

    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"reset probability must be in [0, 1], got {self.p}")

    def select(self, rng: np.random.Generator) -> Arm:
        return Arm.RESET if rng.random() < self.p else Arm.RESTART

    def credit(self, arm: Arm, success: bool) -> None:
        pass

    @property
    def descriptor(self) -> str:
        return f"fixed={self.p:g}"


@dataclass
class BetaArm:
    """Beta posterior of one arm. Starts from the uniform prior."""

    alpha: float = 1.0
    beta_param: float = 1.0


@dataclass
class ThompsonPolicy(BanditPolicy):
    """
    Thompson sampling over two Beta posteriors.

    With decay enabled every update of an arm first scales both of its shape
    parameters by d, so each stays below 1/(1-d) + 1 and recent outcomes dominate.
    Only the credited arm is touched.
    """

    decay_enabled: bool = True
    d: float = 0.8
    arms: dict[Arm, BetaArm] = field(default_factory=lambda: {a: BetaArm() for a in ARMS})

    def __post_init__(self):
        if not 0.0 < self.d < 1.0:
            raise ValueError(f"decay must be in (0, 1), got {self.d}")

    def sample(self, rng: np.random.Generator) -> tuple[float, float]:
        """Draw (restart, reset) samples, in that order."""
        restart = self.arms[Arm.RESTART]
        reset = self.arms[Arm.RESET]
        return (
            sample_beta(restart.alpha, restart.beta_param, rng),
            sample_beta(reset.alpha, reset.beta_param, rng),
        )

    def select(self, rng: np.random.Generator) -> Arm:
        return pick_larger(*self.sample(rng))

    def update(self, arm: Arm, success: bool) -> None:
        state = self.arms[arm]
        if self.decay_enabled:
            state.alpha *= self.d
            state.beta_param *= self.d
        if success:
            state.alpha += 1.0
        else:
            state.beta_param += 1.0

    def credit(self, arm: Arm, success: bool) -> None:
        self.update(arm, success)

    @property
    def descriptor(self) -> str:
        return "thompson-decay" if self.decay_enabled else "thompson"


class SWUCBPolicy(BanditPolicy):
    """
    UCB1 restricted to the last `window_size` (arm, reward) observations.

    An arm missing from the window is played immediately (Restart first).
    Otherwise the index is Q(a) + c * sqrt(ln t / N(a)) with t = min(total
    selections, window size), all statistics taken over the window.
    """

    def __init__(self, window_size: int = 30, c: float = 0.2):
        if window_size < 1:
            raise ValueError(f"window size must be >= 1, got {window_size}")
        if c <= 0:
            raise ValueError(f"exploration constant must be positive, got {c}")
        self.window_size = window_size
        self.c = c
        self.window: deque[tuple[Arm, float]] = deque(maxlen=window_size)
        self.t = 0

    def window_stats(self) -> dict[Arm, tuple[int, float]]:
        """Per arm (count, reward sum) over the current window."""
        stats = {a: [0, 0.0] for a in ARMS}
        for arm, reward in self.window:
            stats[arm][0] += 1
            stats[arm][1] += reward
        return {a: (n, s) for a, (n, s) in stats.items()}

    def ucb_values(self) -> dict[Arm, float]:
        stats = self.window_stats()
        t_eff = min(self.t, self.window_size)
        log_t = math.log(t_eff) if t_eff > 0 else 0.0
        values = {}
        for arm, (n, total) in stats.items():
            if n == 0:
                values[arm] = math.inf
            else:
                values[arm] = total / n + self.c * math.sqrt(log_t / n)
        return values

    def select(self, rng: np.random.Generator | None = None) -> Arm:
        stats = self.window_stats()
        for arm in ARMS:
            if stats[arm][0] == 0:
                return arm
        values = self.ucb_values()
        return pick_larger(values[Arm.RESTART], values[Arm.RESET])

    def record(self, arm: Arm, reward: float) -> None:
        self.window.append((arm, min(1.0, max(0.0, reward))))
        self.t += 1

    def credit(self, arm: Arm, success: bool) -> None:
        self.record(arm, 1.0 if success else 0.0)

    @property
    def descriptor(self) -> str:
        return "swucb"
