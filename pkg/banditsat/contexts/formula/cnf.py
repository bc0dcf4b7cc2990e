"""
CNF data model.

Literals, clauses and formulas are immutable value objects. Variables are
plain positive integers (1..num_vars); a Literal pairs a variable with a
polarity. The engine works on its own packed integer encoding and converts
at the boundary (see engine.solver).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NewType, Optional

from banditsat.contexts.formula.exceptions import InvalidClauseError

Variable = NewType("Variable", int)


@dataclass(frozen=True, order=True)
class Literal:
    """A variable with a polarity (True = positive occurrence)."""

    variable: int
    positive: bool = True

    def __post_init__(self):
        if self.variable < 1:
            raise InvalidClauseError(f"variable index must be >= 1, got {self.variable}")

    def __neg__(self) -> Literal:
        return Literal(self.variable, not self.positive)

    @classmethod
    def from_dimacs(cls, value: int) -> Literal:
        if value == 0:
            raise InvalidClauseError("0 is a clause terminator, not a literal")
        return cls(abs(value), value > 0)

    def to_dimacs(self) -> int:
        return self.variable if self.positive else -self.variable

    def __str__(self) -> str:
        return str(self.to_dimacs())


@dataclass(frozen=True)
class Clause:
    """
    Disjunction of literals.

    Invariants: no duplicate literals, never both a literal and its negation,
    and `lbd` is present exactly when the clause is learnt.
    """

    literals: tuple[Literal, ...]
    learnt: bool = False
    lbd: Optional[int] = None

    def __post_init__(self):
        seen = set()
        for lit in self.literals:
            if lit in seen:
                raise InvalidClauseError(f"duplicate literal {lit} in clause")
            if -lit in seen:
                raise InvalidClauseError(f"tautological clause contains {lit} and {-lit}")
            seen.add(lit)
        if self.learnt != (self.lbd is not None):
            raise InvalidClauseError("lbd must be set exactly for learnt clauses")
        if self.lbd is not None and self.lbd < 1:
            raise InvalidClauseError(f"lbd must be positive, got {self.lbd}")

    @classmethod
    def from_dimacs(cls, values: Iterable[int]) -> Clause:
        return cls(tuple(Literal.from_dimacs(v) for v in values))

    def to_dimacs(self) -> list[int]:
        return [lit.to_dimacs() for lit in self.literals]

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)


def normalize_clause(values: Iterable[int]) -> Optional[list[int]]:
    """
    Deduplicate a DIMACS clause, preserving first-occurrence order.

    Returns None for tautologies.
    """
    out: list[int] = []
    seen: set[int] = set()
    for v in values:
        if -v in seen:
            return None
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


@dataclass(frozen=True)
class Formula:
    """
    A CNF instance.

    `tautologies_dropped` and `declared_clauses` are ingest metadata and do not
    take part in equality, so a serialize/reparse round trip compares equal.
    """

    num_vars: int
    clauses: tuple[Clause, ...]
    tautologies_dropped: int = field(default=0, compare=False)
    declared_clauses: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if self.num_vars < 0:
            raise InvalidClauseError(f"num_vars must be non-negative, got {self.num_vars}")
        for clause in self.clauses:
            for lit in clause.literals:
                if lit.variable > self.num_vars:
                    raise InvalidClauseError(
                        f"literal {lit} exceeds declared variable count {self.num_vars}"
                    )

    @classmethod
    def from_lists(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> Formula:
        """Build a formula from DIMACS-style integer lists, applying ingest normalization."""
        kept = []
        dropped = 0
        for raw in clauses:
            normalized = normalize_clause(raw)
            if normalized is None:
                dropped += 1
            else:
                kept.append(Clause.from_dimacs(normalized))
        return cls(num_vars, tuple(kept), tautologies_dropped=dropped)

    @property
    def trivially_unsat(self) -> bool:
        """True when the formula contains an empty clause."""
        return any(len(c) == 0 for c in self.clauses)

    @property
    def variables(self) -> range:
        return range(1, self.num_vars + 1)

    def to_lists(self) -> list[list[int]]:
        return [c.to_dimacs() for c in self.clauses]

    def to_dimacs(self) -> str:
        """Canonical DIMACS: header, one clause per line, `0` terminators."""
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        for clause in self.clauses:
            lines.append(" ".join([*(str(v) for v in clause.to_dimacs()), "0"]))
        return "\n".join(lines) + "\n"


class Verdict(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    INDETERMINATE = "INDET"


@dataclass(frozen=True)
class Outcome:
    """Solver or oracle answer. `model` is a total assignment when SAT."""

    verdict: Verdict
    model: Optional[dict[int, bool]] = None

    @classmethod
    def sat(cls, model: dict[int, bool]) -> Outcome:
        return cls(Verdict.SAT, dict(model))

    @classmethod
    def unsat(cls) -> Outcome:
        return cls(Verdict.UNSAT)

    @classmethod
    def indeterminate(cls) -> Outcome:
        return cls(Verdict.INDETERMINATE)

    @property
    def is_sat(self) -> bool:
        return self.verdict is Verdict.SAT

    @property
    def is_unsat(self) -> bool:
        return self.verdict is Verdict.UNSAT

    def model_literals(self) -> list[int]:
        """Model as signed DIMACS integers in variable order."""
        if self.model is None:
            return []
        return [v if self.model[v] else -v for v in sorted(self.model)]
