"""
Restart-window learning rate and its exponential moving average.

rw_glr of a window is learned clauses per decision. A window is a success when its
rw_glr beats the EMA accumulated over the previous windows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from banditsat.contexts.bandit import Arm


def rw_glr(window_learned: int, window_decisions: int) -> float:
    """Learned clauses per decision in one window; 0 for a window without decisions."""
    if window_decisions == 0:
        return 0.0
    return window_learned / window_decisions


def classify(rw: float, ema: float, flip: bool = False) -> bool:
    """
    Success iff rw > ema (ties are failures). With `flip`, success iff ema > rw.
    """
    return ema > rw if flip else rw > ema


@dataclass
class RewardTracker:
    """
    Per-window counters, the rw_glr EMA, and the arm awaiting credit.

    Window counters are derived from the solver's running totals: `close_window`
    turns the totals into this window's counts, `open_window` zeroes them and
    remembers the totals as the new starting marks.
    """

    ema_decay: float = 0.8
    window_decisions: int = 0
    window_learned: int = 0
    ema: float = 0.0
    pending_arm: Optional[Arm] = None
    windows_seen: int = 0
    _decisions_mark: int = field(default=0, repr=False)
    _learned_mark: int = field(default=0, repr=False)

    def __post_init__(self):
        if not 0.0 < self.ema_decay < 1.0:
            raise ValueError(f"EMA decay must be in (0, 1), got {self.ema_decay}")

    def close_window(self, total_decisions: int, total_learned: int) -> float:
        """Fix this window's counters from running totals and return its rw_glr."""
        self.window_decisions = total_decisions - self._decisions_mark
        self.window_learned = total_learned - self._learned_mark
        return rw_glr(self.window_learned, self.window_decisions)

    def open_window(self, total_decisions: int, total_learned: int) -> None:
        self.window_decisions = 0
        self.window_learned = 0
        self._decisions_mark = total_decisions
        self._learned_mark = total_learned

    def update_ema(self, value: float) -> float:
        """ema <- lambda * ema + (1 - lambda) * value; the first window sets ema = value."""
        if value < 0:
            raise ValueError(f"rw_glr must be non-negative, got {value}")
        if self.windows_seen == 0:
            self.ema = value
        else:
            self.ema = self.ema_decay * self.ema + (1.0 - self.ema_decay) * value
        self.windows_seen += 1
        return self.ema
