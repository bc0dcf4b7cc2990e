"""
EVSIDS activity table with a lazy max-priority heap.

Heap entries are (-activity, variable) so heapq pops the highest activity first and,
among equal activities, the lowest variable index. Entries are never updated in
place: a bump pushes a fresh entry, and an entry whose activity no longer matches
the table (or whose variable is assigned) is discarded when it reaches the top.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable, Optional, Sequence

RESCALE_LIMIT = 1e100
RESCALE_FACTOR = 1e-100


class ActivityTable:
    """
    Per-variable activity scores (index 0 unused) with bump increment and decay.

    Invariant: every unassigned variable has at least one heap entry carrying its
    current activity, so the unassigned variable of maximal activity is always found.
    """

    def __init__(self, num_vars: int, decay_factor: float = 0.95):
        if not 0.0 < decay_factor < 1.0:
            raise ValueError(f"decay factor must be in (0, 1), got {decay_factor}")
        self.num_vars = num_vars
        self.decay_factor = decay_factor
        self.bump_increment = 1.0
        self.activity = [0.0] * (num_vars + 1)
        self._heap: list[tuple[float, int]] = []
        self.rebuild()

    def __len__(self) -> int:
        return self.num_vars

    def __getitem__(self, var: int) -> float:
        return self.activity[var]

    def rebuild(self) -> None:
        """Recreate the heap from the current activities of all variables."""
        self._heap = [(-self.activity[v], v) for v in range(1, self.num_vars + 1)]
        heapq.heapify(self._heap)

    def push(self, var: int) -> None:
        """Re-enter a variable that has just become unassigned."""
        heapq.heappush(self._heap, (-self.activity[var], var))
        if len(self._heap) > 4 * self.num_vars + 64:
            self.rebuild()

    def bump(self, var: int) -> None:
        self.activity[var] += self.bump_increment
        heapq.heappush(self._heap, (-self.activity[var], var))

    def bump_and_decay(self, variables: Iterable[int]) -> None:
        """
        Bump every variable once, then grow the increment by 1/decay.

        When an activity or the increment reaches 1e100, all activities and the
        increment are scaled by 1e-100. Uniform scaling keeps the order intact.
        """
        peak = 0.0
        for var in variables:
            self.activity[var] += self.bump_increment
            heapq.heappush(self._heap, (-self.activity[var], var))
            peak = max(peak, self.activity[var])
        self.bump_increment /= self.decay_factor
        if peak >= RESCALE_LIMIT or self.bump_increment >= RESCALE_LIMIT:
            self.rescale()
        elif len(self._heap) > 4 * self.num_vars + 64:
            self.rebuild()

    def rescale(self) -> None:
        self.activity = [a * RESCALE_FACTOR for a in self.activity]
        self.bump_increment *= RESCALE_FACTOR
        self.rebuild()

    def set_activities(self, values: Sequence[float], bump_increment: Optional[float] = None) -> None:
        """
        Replace all activities (values[i] belongs to variable i+1) and rebuild the heap.
        """
        if len(values) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} activities, got {len(values)}")
        self.activity = [0.0, *(float(v) for v in values)]
        if bump_increment is not None:
            self.bump_increment = bump_increment
        self.rebuild()

    def next_unassigned(self, is_assigned: Callable[[int], bool]) -> Optional[int]:
        """
        Unassigned variable of maximal activity, lowest index on ties.

        The winning entry stays on the heap; it is dropped lazily once assigned.
        """
        heap = self._heap
        activity = self.activity
        while heap:
            neg, var = heap[0]
            if -neg != activity[var] or is_assigned(var):
                heapq.heappop(heap)
                continue
            return var
        return None

    def order(self) -> list[int]:
        """All variables sorted by activity (descending), ties by lower index."""
        return sorted(range(1, self.num_vars + 1), key=lambda v: (-self.activity[v], v))

    def top(self, k: int) -> list[int]:
        return heapq.nsmallest(k, range(1, self.num_vars + 1), key=lambda v: (-self.activity[v], v))
