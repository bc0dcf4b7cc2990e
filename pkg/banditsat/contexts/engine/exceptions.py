"""Custom exceptions for the engine context."""

from typing import Any, Optional


class ConfigError(ValueError):
    """
    Exception raised when a solver setting is out of range.

    Attributes:
        field: Name of the offending setting (e.g. 'policy.probability')
        value: The rejected value
        expected: Human-readable description of the accepted range
    """

    def __init__(self, field: str, value: Any, expected: Optional[str] = None):
        self.field = field
        self.value = value
        self.expected = expected

        message = f"invalid {field}: {value!r}"
        if expected:
            message += f" (expected {expected})"
        super().__init__(message)


class SolverStateError(RuntimeError):
    """The solver API was called in a state that does not allow it."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed. Always a solver bug."""
