"""
Model checking and the exhaustive reference solver.

`brute_force_solve` is the correctness oracle for the engine: it enumerates
assignments in lexicographic order (variable 1 most significant, False before
True) and returns the first model, so its answer is fully determined by the
formula. Enumeration is vectorized over blocks of assignments with numpy.
"""

from __future__ import annotations

from typing import Mapping

import numpy as np

from banditsat.contexts.formula.cnf import Formula, Outcome
from banditsat.contexts.formula.exceptions import IncompleteAssignmentError, OracleLimitError

MAX_ORACLE_VARS = 25
_BLOCK_BITS = 16


def evaluate(formula: Formula, assignment: Mapping[int, bool]) -> bool:
    """
    Check a total assignment against every clause.

    Raises:
        IncompleteAssignmentError: If any variable 1..num_vars is unassigned
    """
    missing = [v for v in formula.variables if v not in assignment]
    if missing:
        raise IncompleteAssignmentError(missing)

    for clause in formula.clauses:
        if not any(assignment[lit.variable] == lit.positive for lit in clause.literals):
            return False
    return True


def brute_force_solve(formula: Formula) -> Outcome:
    """
    Decide a small formula by exhaustive enumeration.

    Returns:
        SAT with the lexicographically first model, or UNSAT

    Raises:
        OracleLimitError: If the formula has more than MAX_ORACLE_VARS variables
    """
    n = formula.num_vars
    if n > MAX_ORACLE_VARS:
        raise OracleLimitError(
            f"brute force is limited to {MAX_ORACLE_VARS} variables, formula has {n}"
        )
    if formula.trivially_unsat:
        return Outcome.unsat()

    columns = [
        (
            np.fromiter((lit.variable - 1 for lit in c.literals), dtype=np.int64),
            np.fromiter((lit.positive for lit in c.literals), dtype=bool),
        )
        for c in formula.clauses
    ]
    # Column j holds variable j+1, which sits at bit n-1-j of the row index
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    total = 1 << n
    block = 1 << min(n, _BLOCK_BITS)

    for start in range(0, total, block):
        rows = np.arange(start, min(start + block, total), dtype=np.int64)
        bits = ((rows[:, None] >> shifts[None, :]) & 1).astype(bool)
        alive = np.ones(len(rows), dtype=bool)
        for cols, polarity in columns:
            alive &= (bits[:, cols] == polarity).any(axis=1)
            if not alive.any():
                break
        hits = np.flatnonzero(alive)
        if hits.size:
            first = bits[hits[0]]
            return Outcome.sat({v: bool(first[v - 1]) for v in formula.variables})

    return Outcome.unsat()
