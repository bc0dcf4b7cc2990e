"""
DIMACS CNF reading and writing.

Accepted input:
    c optional comment lines
    p cnf <vars> <clauses>
    whitespace-separated integer literals, each clause terminated by 0
    (clauses may span lines; a SATLIB-style `%` line ends the data)

Ingest normalization: duplicate literals are removed, tautological clauses are
dropped and counted, empty clauses are kept (the formula is then trivially
UNSAT). A header clause count that disagrees with the data is a warning only.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterator, Optional, Union

from banditsat.contexts.formula.cnf import Clause, Formula, normalize_clause
from banditsat.contexts.formula.exceptions import (
    InvalidTokenError,
    MissingHeaderError,
    UnterminatedClauseError,
    VariableOutOfRangeError,
)
from banditsat.contexts.formula.logger import _log_warning

DimacsSource = Union[bytes, str, IO[bytes], IO[str]]


def _iter_lines(source: DimacsSource) -> Iterator[str]:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8", errors="replace")
    return iter(source.splitlines())


def _parse_header(line: str, line_number: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
        raise MissingHeaderError("garbled header, expected 'p cnf <vars> <clauses>'", line_number, line)
    try:
        num_vars, num_clauses = int(parts[2]), int(parts[3])
    except ValueError:
        raise MissingHeaderError("header counts must be integers", line_number, line) from None
    if num_vars < 0 or num_clauses < 0:
        raise MissingHeaderError("header counts must be non-negative", line_number, line)
    return num_vars, num_clauses


def parse_dimacs(source: DimacsSource) -> Formula:
    """
    Parse DIMACS CNF text into a Formula.

    Args:
        source: bytes, str, or an open (binary or text) stream

    Returns:
        Formula with num_vars from the header

    Raises:
        MissingHeaderError: No header, a garbled header, or clause data before it
        InvalidTokenError: A clause token is not an integer
        VariableOutOfRangeError: A literal's variable exceeds the declared count
        UnterminatedClauseError: The final clause lacks its terminating 0
    """
    num_vars: Optional[int] = None
    declared = 0
    clauses: list[Clause] = []
    dropped = 0
    current: list[int] = []
    current_line = 0

    for line_number, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if num_vars is not None:
                raise MissingHeaderError("duplicate header", line_number, line)
            num_vars, declared = _parse_header(line, line_number)
            continue
        if num_vars is None:
            raise MissingHeaderError("clause data before 'p cnf' header", line_number, line)

        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise InvalidTokenError(f"non-integer token '{token}'", line_number, line) from None
            if value == 0:
                normalized = normalize_clause(current)
                if normalized is None:
                    dropped += 1
                else:
                    clauses.append(Clause.from_dimacs(normalized))
                current = []
                continue
            if abs(value) > num_vars:
                raise VariableOutOfRangeError(abs(value), num_vars, line_number, line)
            if not current:
                current_line = line_number
            current.append(value)

    if num_vars is None:
        raise MissingHeaderError("missing 'p cnf' header")
    if current:
        raise UnterminatedClauseError("final clause is not terminated by 0", current_line)

    parsed = len(clauses) + dropped
    if parsed != declared:
        _log_warning(f"header declares {declared} clauses but {parsed} were read")
    if dropped:
        _log_warning(f"dropped {dropped} tautological clause(s)")

    return Formula(num_vars, tuple(clauses), tautologies_dropped=dropped, declared_clauses=declared)


def read_dimacs(path: Path) -> Formula:
    """Parse an uncompressed DIMACS file."""
    with open(path, "rb") as f:
        return parse_dimacs(f)


def write_dimacs(formula: Formula, path: Path, comments: Optional[list[str]] = None) -> Path:
    """Write canonical DIMACS, optionally preceded by `c` comment lines."""
    header = "".join(f"c {comment}\n" for comment in comments or [])
    path.write_text(header + formula.to_dimacs(), encoding="utf-8")
    return path
