"""Custom exceptions for the benchmarking context."""

from pathlib import Path
from typing import Optional


class BatchInputError(ValueError):
    """
    Exception raised when a batch cannot start.

    Attributes:
        message: Error description
        path: Directory or file that was rejected
    """

    def __init__(self, message: str, path: Optional[Path] = None):
        self.message = message
        self.path = path
        super().__init__(f"{message}: {path}" if path is not None else message)


class CactusInputError(ValueError):
    """
    Exception raised when a BatchRecord CSV is malformed.

    Attributes:
        message: Error description
        path: CSV file being read
        row_number: 1-based data row (header excluded), if known
    """

    def __init__(self, message: str, path: Optional[Path] = None, row_number: Optional[int] = None):
        self.message = message
        self.path = path
        self.row_number = row_number

        location = str(path) if path is not None else "<csv>"
        if row_number is not None:
            location += f", row {row_number}"
        super().__init__(f"{location}: {message}")
