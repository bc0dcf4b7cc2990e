"""
Formula Context

Responsibilities:
- CNF data model (Literal, Clause, Formula) and solver answers (Verdict, Outcome)
- DIMACS parsing and canonical serialization
- Model checking and the brute-force oracle used to test the engine
- Benchmark family generators

Owns: instance representation and ingest normalization
Never: Searches for models beyond exhaustive enumeration
"""

from banditsat.contexts.formula.cnf import Clause, Formula, Literal, Outcome, Variable, Verdict
from banditsat.contexts.formula.dimacs import parse_dimacs, read_dimacs, write_dimacs
from banditsat.contexts.formula.exceptions import (
    DimacsParseError,
    IncompleteAssignmentError,
    InvalidClauseError,
    InvalidTokenError,
    MissingHeaderError,
    OracleLimitError,
    UnterminatedClauseError,
    VariableOutOfRangeError,
)
from banditsat.contexts.formula.oracle import MAX_ORACLE_VARS, brute_force_solve, evaluate

__all__ = [
    # Data model
    "Variable",
    "Literal",
    "Clause",
    "Formula",
    "Verdict",
    "Outcome",
    # DIMACS I/O
    "parse_dimacs",
    "read_dimacs",
    "write_dimacs",
    # Checking
    "evaluate",
    "brute_force_solve",
    "MAX_ORACLE_VARS",
    # Errors
    "DimacsParseError",
    "MissingHeaderError",
    "VariableOutOfRangeError",
    "InvalidTokenError",
    "UnterminatedClauseError",
    "InvalidClauseError",
    "IncompleteAssignmentError",
    "OracleLimitError",
]
