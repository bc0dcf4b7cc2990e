"""Per-window reset trace and its CSV form."""

import csv
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional


@dataclass(frozen=True)
class WindowRecord:
    """
    One closed restart window.

    `arm` is the arm credited with this window's outcome (the one pulled at the
    previous boundary); it and `success` are None for the first window.
    `action` is what the boundary closing this window executed next.
    """

    window: int
    arm: Optional[str]
    rw_glr: float
    ema_before: Optional[float]
    ema_after: float
    success: Optional[bool]
    action: str


TRACE_COLUMNS = [f.name for f in fields(WindowRecord)]


def write_window_trace(records: Iterable[WindowRecord], path: Path) -> Path:
    """Write window records as CSV (None becomes an empty cell)."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=TRACE_COLUMNS)
        writer.writeheader()
        for record in records:
            row = asdict(record)
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return path
