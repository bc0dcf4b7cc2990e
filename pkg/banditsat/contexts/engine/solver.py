"""
CDCL solver.

Two watched literals, first-UIP learning with LBD, EVSIDS branching with phase
saving, Luby restarts and glue-protected clause database reduction. At every
restart boundary the solver hands control to a boundary hook (the reset
controller), which clears the trail and may rewrite the activity table.

Literals are packed integers inside the solver: variable v is 2v (positive) and
2v+1 (negative), so negation is `lit ^ 1`. `assigns[v]` is 1, -1 or 0 (unassigned).
Public methods speak formula.Literal / formula.Clause.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Protocol, Sequence

import numpy as np

from banditsat.contexts.engine.activity import ActivityTable
from banditsat.contexts.engine.config import SolverConfig
from banditsat.contexts.engine.exceptions import InvariantViolation, SolverStateError
from banditsat.contexts.engine.logger import log_solve_result, log_solve_start
from banditsat.contexts.engine.luby import restart_threshold
from banditsat.contexts.engine.stats import RunStats, SolveResult
from banditsat.contexts.formula import Clause, Formula, Literal, Outcome, evaluate
from banditsat.utils.timing import Deadline

if TYPE_CHECKING:
    from banditsat.contexts.reset.actions import ResetAction

TIME_CHECK_INTERVAL = 1024


def encode(lit: Literal) -> int:
    return 2 * lit.variable + (0 if lit.positive else 1)


def decode(lit: int) -> Literal:
    return Literal(lit >> 1, not lit & 1)


def compute_lbd(levels: Iterable[int]) -> int:
    """Number of distinct decision levels among a clause's literals."""
    return len(set(levels))


def backjump_level(levels: Sequence[int]) -> int:
    """Second-highest distinct decision level of a learnt clause, 0 for units."""
    distinct = sorted(set(levels), reverse=True)
    return distinct[1] if len(distinct) > 1 else 0


class ClauseRef:
    """Mutable solver-side clause. `lits[0]` and `lits[1]` are the watched literals."""

    __slots__ = ("lits", "learnt", "lbd", "activity", "removed")

    def __init__(self, lits: list[int], learnt: bool = False, lbd: int = 0):
        self.lits = lits
        self.learnt = learnt
        self.lbd = lbd
        self.activity = 0.0
        self.removed = False

    def to_clause(self) -> Clause:
        return Clause(
            tuple(decode(lit) for lit in self.lits),
            learnt=self.learnt,
            lbd=self.lbd if self.learnt else None,
        )

    def __repr__(self) -> str:
        body = " ".join(str(decode(lit)) for lit in self.lits)
        return f"ClauseRef([{body}], learnt={self.learnt}, lbd={self.lbd})"


@dataclass(frozen=True)
class ConflictAnalysis:
    """First-UIP learnt clause (UIP first, highest remaining level second)."""

    lits: tuple[int, ...]
    backjump_level: int
    lbd: int

    @property
    def clause(self) -> Clause:
        return Clause(tuple(decode(lit) for lit in self.lits), learnt=True, lbd=self.lbd)


class BoundaryHook(Protocol):
    def on_restart_boundary(self, solver: Solver) -> ResetAction: ...


class Solver:
    """
    Single-use CDCL search over one formula.

    Args:
        formula: Instance to decide
        config: Search settings (defaults when None)
        hook: Restart-boundary hook; a ResetController built from `config` when None
    """

    def __init__(
        self,
        formula: Formula,
        config: Optional[SolverConfig] = None,
        hook: Optional[BoundaryHook] = None,
    ):
        self.formula = formula
        self.config = config or SolverConfig()
        self.num_vars = n = formula.num_vars

        self.assigns = [0] * (n + 1)
        self.level = [0] * (n + 1)
        self.reason: list[Optional[ClauseRef]] = [None] * (n + 1)
        self.phase = [False] * (n + 1)
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0

        self.watches: list[list[ClauseRef]] = [[] for _ in range(2 * n + 2)]
        self.clauses: list[ClauseRef] = []
        self.learnts: list[ClauseRef] = []
        self.clause_increment = 1.0
        self.max_learnts = float(self.config.learnt_limit)

        self.activity = ActivityTable(n, self.config.activity_decay)
        self.stats = RunStats()
        self.rng = np.random.default_rng(self.config.seed)

        if hook is None:
            from banditsat.contexts.reset.controller import ResetController

            hook = ResetController.from_config(self.config)
        self.hook = hook

        self.ok = True
        for clause in formula.clauses:
            self._add_original([encode(lit) for lit in clause.literals])

    # -- assignment ------------------------------------------------------------

    @property
    def decision_level(self) -> int:
        return len(self.trail_lim)

    def _value(self, lit: int) -> int:
        a = self.assigns[lit >> 1]
        return -a if lit & 1 else a

    def value(self, lit: Literal) -> Optional[bool]:
        """Current truth value of a literal, None when unassigned."""
        v = self._value(encode(lit))
        return None if v == 0 else v == 1

    def level_of(self, var: int) -> int:
        return self.level[var]

    def reason_of(self, var: int) -> Optional[Clause]:
        reason = self.reason[var]
        return reason.to_clause() if reason is not None else None

    def trail_literals(self) -> list[Literal]:
        return [decode(lit) for lit in self.trail]

    def _enqueue(self, lit: int, reason: Optional[ClauseRef]) -> None:
        v = lit >> 1
        self.assigns[v] = -1 if lit & 1 else 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _assume(self, lit: int) -> None:
        self.trail_lim.append(len(self.trail))
        self._enqueue(lit, None)

    def assume(self, lit: Literal) -> None:
        """Open a new decision level and assign `lit` there."""
        if self._value(encode(lit)) != 0:
            raise SolverStateError(f"literal {lit} is already assigned")
        self._assume(encode(lit))

    def cancel_until(self, level: int) -> None:
        """Undo every assignment above `level`, saving phases."""
        if self.decision_level <= level:
            return
        stop = self.trail_lim[level]
        for lit in reversed(self.trail[stop:]):
            v = lit >> 1
            self.phase[v] = not lit & 1
            self.assigns[v] = 0
            self.reason[v] = None
            self.activity.push(v)
        del self.trail[stop:]
        del self.trail_lim[level:]
        self.qhead = min(self.qhead, stop)

    # -- clause database -------------------------------------------------------

    def _add_original(self, lits: list[int]) -> None:
        if not lits:
            self.ok = False
            return
        if len(lits) == 1:
            value = self._value(lits[0])
            if value == -1:
                self.ok = False
            elif value == 0:
                self._enqueue(lits[0], ClauseRef(lits))
            return
        clause = ClauseRef(lits)
        self.clauses.append(clause)
        self.watches[lits[0]].append(clause)
        self.watches[lits[1]].append(clause)

    def _bump_clause(self, clause: ClauseRef) -> None:
        clause.activity += self.clause_increment
        if clause.activity > 1e20:
            for c in self.learnts:
                c.activity *= 1e-20
            self.clause_increment *= 1e-20

    def _locked(self, clause: ClauseRef) -> bool:
        first = clause.lits[0]
        return self.reason[first >> 1] is clause and self._value(first) == 1

    def reduce_db(self) -> int:
        """
        Delete the worse half of the unprotected learnt clauses.

        Clauses with lbd <= 2 and reasons of current trail literals are kept. The
        rest are ordered by (lbd desc, activity asc) and the first half removed.
        The learnt limit then grows geometrically. Returns the number deleted.
        """
        candidates = [c for c in self.learnts if c.lbd > 2 and not self._locked(c)]
        candidates.sort(key=lambda c: (-c.lbd, c.activity))
        doomed = candidates[: len(candidates) // 2]
        for clause in doomed:
            clause.removed = True
        if doomed:
            self.learnts = [c for c in self.learnts if not c.removed]
        self.stats.deleted_clauses += len(doomed)
        self.max_learnts *= self.config.learnt_limit_growth
        return len(doomed)

    # -- propagation -----------------------------------------------------------

    def propagate(self) -> Optional[ClauseRef]:
        """
        Unit propagation to fixpoint over the two-watched-literal scheme.

        Returns the first conflicting clause, or None. Watches of removed clauses
        are dropped as they are visited.
        """
        assigns = self.assigns
        watches = self.watches
        trail = self.trail
        conflict = None

        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            self.stats.propagations += 1
            false_lit = p ^ 1
            ws = watches[false_lit]
            i = j = 0
            end = len(ws)
            while i < end:
                clause = ws[i]
                i += 1
                if clause.removed:
                    continue
                lits = clause.lits
                if lits[0] == false_lit:
                    lits[0], lits[1] = lits[1], false_lit
                first = lits[0]
                a = assigns[first >> 1]
                first_value = -a if first & 1 else a
                if first_value == 1:
                    ws[j] = clause
                    j += 1
                    continue
                for k in range(2, len(lits)):
                    lit = lits[k]
                    b = assigns[lit >> 1]
                    if (-b if lit & 1 else b) != -1:
                        lits[1], lits[k] = lit, false_lit
                        watches[lit].append(clause)
                        break
                else:
                    ws[j] = clause
                    j += 1
                    if first_value == -1:
                        conflict = clause
                        while i < end:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        self.qhead = len(trail)
                    else:
                        self._enqueue(first, clause)
            del ws[j:]
            if conflict is not None:
                break

        if conflict is None and self.config.check_invariants:
            self.check_watch_invariant()
        return conflict

    # -- conflict analysis -----------------------------------------------------

    def analyze_conflict(self, conflict: ClauseRef) -> ConflictAnalysis:
        """
        Derive the first-UIP clause of a conflict at the current level.

        Every variable met during resolution is bumped once. The learnt clause
        holds the negated UIP first and the literal of the backjump level second.

        Raises:
            SolverStateError: If called at decision level 0
        """
        current = self.decision_level
        if current == 0:
            raise SolverStateError("conflict analysis at decision level 0")

        level = self.level
        trail = self.trail
        seen: set[int] = set()
        learnt: list[int] = [0]
        pending = 0
        p: Optional[int] = None
        index = len(trail) - 1
        clause = conflict

        while True:
            if clause.learnt:
                self._bump_clause(clause)
            for q in clause.lits:
                if q == p:
                    continue
                v = q >> 1
                if v in seen or level[v] == 0:
                    continue
                seen.add(v)
                if level[v] >= current:
                    pending += 1
                else:
                    learnt.append(q)
            while (trail[index] >> 1) not in seen:
                index -= 1
            p = trail[index]
            index -= 1
            pending -= 1
            if pending == 0:
                break
            clause = self.reason[p >> 1]

        learnt[0] = p ^ 1
        self.activity.bump_and_decay(seen)

        levels = [level[lit >> 1] for lit in learnt]
        if len(learnt) > 1:
            best = max(range(1, len(learnt)), key=lambda i: levels[i])
            learnt[1], learnt[best] = learnt[best], learnt[1]
            levels[1], levels[best] = levels[best], levels[1]

        if self.config.check_invariants:
            at_current = sum(1 for lv in levels if lv == current)
            if at_current != 1:
                raise InvariantViolation(
                    f"learnt clause has {at_current} literals at conflict level {current}"
                )

        return ConflictAnalysis(tuple(learnt), backjump_level(levels), compute_lbd(levels))

    def _learn(self, analysis: ConflictAnalysis) -> None:
        lits = list(analysis.lits)
        self.stats.learned_clauses += 1
        if len(lits) == 1:
            self._enqueue(lits[0], ClauseRef(lits, learnt=True, lbd=1))
            return
        clause = ClauseRef(lits, learnt=True, lbd=analysis.lbd)
        self._bump_clause(clause)
        self.learnts.append(clause)
        self.watches[lits[0]].append(clause)
        self.watches[lits[1]].append(clause)
        self._enqueue(lits[0], clause)

    # -- branching -------------------------------------------------------------

    def _is_assigned(self, var: int) -> bool:
        return self.assigns[var] != 0

    def _pick_branch_lit(self) -> Optional[int]:
        var = self.activity.next_unassigned(self._is_assigned)
        if var is None:
            return None
        return 2 * var + (0 if self.phase[var] else 1)

    def decide(self) -> Literal:
        """
        Branching literal: maximal-activity unassigned variable, saved phase.

        Does not assign it.

        Raises:
            SolverStateError: If every variable is assigned
        """
        lit = self._pick_branch_lit()
        if lit is None:
            raise SolverStateError("decide called with a complete assignment")
        return decode(lit)

    # -- invariants ------------------------------------------------------------

    def check_watch_invariant(self) -> None:
        """
        Verify that live clauses are watched on lits[0] and lits[1], and that a
        watch is false only when the other watch is true.

        Raises:
            InvariantViolation: On the first broken clause
        """
        for clause in (*self.clauses, *self.learnts):
            if clause.removed:
                continue
            w0, w1 = clause.lits[0], clause.lits[1]
            if clause not in self.watches[w0] or clause not in self.watches[w1]:
                raise InvariantViolation(f"{clause!r} is not watched on its first two literals")
            v0, v1 = self._value(w0), self._value(w1)
            if (v0 == -1 and v1 != 1) or (v1 == -1 and v0 != 1):
                raise InvariantViolation(f"{clause!r} has a false watch at propagation fixpoint")

    # -- search ----------------------------------------------------------------

    def _model(self) -> dict[int, bool]:
        return {v: self.assigns[v] == 1 for v in range(1, self.num_vars + 1)}

    def _finish(self, outcome: Outcome, deadline: Deadline) -> SolveResult:
        self.stats.elapsed_s = round(deadline.elapsed(), 3)
        log_solve_result(outcome.verdict.value, self.stats)
        windows = list(getattr(self.hook, "windows", []))
        return SolveResult(outcome=outcome, stats=self.stats, windows=windows)

    def solve(self) -> SolveResult:
        """
        Run CDCL search until a verdict or budget exhaustion.

        SAT models are checked against the formula before they are returned.

        Raises:
            InvariantViolation: If a found model does not satisfy the formula
        """
        config = self.config
        stats = self.stats
        deadline = Deadline(config.time_limit_s)
        record = config.record_search_trace

        log_solve_start(self.num_vars, len(self.formula.clauses), config.descriptor(), config.seed)

        if not self.ok or self.propagate() is not None:
            return self._finish(Outcome.unsat(), deadline)

        window_conflicts = 0
        window_limit = restart_threshold(stats.restarts, config.luby_unit)

        while True:
            conflict = self.propagate()
            if conflict is not None:
                stats.conflicts += 1
                window_conflicts += 1
                if record:
                    stats.conflict_levels.append(self.decision_level)
                if self.decision_level == 0:
                    return self._finish(Outcome.unsat(), deadline)

                analysis = self.analyze_conflict(conflict)
                self.cancel_until(analysis.backjump_level)
                self._learn(analysis)
                self.clause_increment /= config.clause_decay

                if config.max_conflicts is not None and stats.conflicts >= config.max_conflicts:
                    return self._finish(Outcome.indeterminate(), deadline)
                if stats.conflicts % TIME_CHECK_INTERVAL == 0 and deadline.expired():
                    return self._finish(Outcome.indeterminate(), deadline)
                continue

            if window_conflicts >= window_limit:
                self.hook.on_restart_boundary(self)
                window_conflicts = 0
                window_limit = restart_threshold(stats.restarts, config.luby_unit)
                continue

            if len(self.learnts) > self.max_learnts:
                self.reduce_db()

            lit = self._pick_branch_lit()
            if lit is None:
                model = self._model()
                if not evaluate(self.formula, model):
                    raise InvariantViolation("search produced an assignment that falsifies the formula")
                return self._finish(Outcome.sat(model), deadline)

            stats.decisions += 1
            if record:
                stats.decision_trace.append(decode(lit).to_dimacs())
            self._assume(lit)


def solve(formula: Formula, config: Optional[SolverConfig] = None) -> SolveResult:
    """Decide `formula` with a fresh solver."""
    return Solver(formula, config).solve()
