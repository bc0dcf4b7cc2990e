"""Custom exceptions for the formula context."""

from typing import Optional


class DimacsParseError(ValueError):
    """
    Exception raised when DIMACS input cannot be read.

    Attributes:
        message: Error description
        line_number: 1-based line of the offending token (None if the input ended early)
        line: The offending source line, if available
    """

    def __init__(self, message: str, line_number: Optional[int] = None, line: Optional[str] = None):
        self.message = message
        self.line_number = line_number
        self.line = line

        parts = [f"line {line_number}: {message}" if line_number is not None else message]
        if line:
            snippet = line[:80] + "..." if len(line) > 80 else line
            parts.append(f"  {snippet}")

        super().__init__("\n".join(parts))


class MissingHeaderError(DimacsParseError):
    """No `p cnf <vars> <clauses>` header, or a garbled one."""


class VariableOutOfRangeError(DimacsParseError):
    """A literal references a variable above the header's declared count."""

    def __init__(self, variable: int, num_vars: int, line_number: int, line: Optional[str] = None):
        self.variable = variable
        self.num_vars = num_vars
        super().__init__(
            f"variable {variable} exceeds declared count {num_vars}", line_number, line
        )


class InvalidTokenError(DimacsParseError):
    """A clause token is not an integer."""


class UnterminatedClauseError(DimacsParseError):
    """The input ended inside a clause (missing trailing 0)."""


class InvalidClauseError(ValueError):
    """A Clause was built in violation of its invariants."""


class IncompleteAssignmentError(ValueError):
    """An assignment does not cover every variable of the formula."""

    def __init__(self, missing: list[int]):
        self.missing = missing
        shown = ", ".join(str(v) for v in missing[:10])
        more = f" (+{len(missing) - 10} more)" if len(missing) > 10 else ""
        super().__init__(f"assignment is missing variables: {shown}{more}")


class OracleLimitError(ValueError):
    """The brute-force oracle was asked to enumerate too many variables."""
