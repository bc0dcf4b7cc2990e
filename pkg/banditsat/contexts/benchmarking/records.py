"""
BatchRecord and its CSV schema.

Columns (stable, see docs/RESULT_FORMATS.md):
    instance, policy, seed, verdict, wall_s, conflicts, decisions, restarts, resets, error

verdict is SAT, UNSAT, INDET or ERROR. wall_s has millisecond resolution. error is
empty unless verdict is ERROR.
"""

from __future__ import annotations

import csv
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Iterable, TextIO

from banditsat.contexts.benchmarking.exceptions import CactusInputError

ERROR_VERDICT = "ERROR"
VERDICTS = ("SAT", "UNSAT", "INDET", ERROR_VERDICT)
SOLVED_VERDICTS = ("SAT", "UNSAT")


@dataclass(frozen=True)
class BatchRecord:
    instance: str
    policy: str
    seed: int
    verdict: str
    wall_s: float
    conflicts: int = 0
    decisions: int = 0
    restarts: int = 0
    resets: int = 0
    error: str = ""

    @property
    def key(self) -> tuple[str, str, int]:
        return (self.instance, self.policy, self.seed)

    @property
    def solved(self) -> bool:
        return self.verdict in SOLVED_VERDICTS

    def to_row(self) -> list:
        row = list(astuple(self))
        row[BATCH_COLUMNS.index("wall_s")] = f"{self.wall_s:.3f}"
        return row

    @classmethod
    def from_row(cls, row: dict) -> BatchRecord:
        """
        Parse a CSV row.

        Raises:
            ValueError: On a missing column, bad number or unknown verdict
        """
        missing = [c for c in BATCH_COLUMNS if row.get(c) is None]
        if missing:
            raise ValueError(f"missing columns {missing}")
        verdict = row["verdict"]
        if verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {verdict!r}")
        return cls(
            instance=row["instance"],
            policy=row["policy"],
            seed=int(row["seed"]),
            verdict=verdict,
            wall_s=float(row["wall_s"]),
            conflicts=int(row["conflicts"]),
            decisions=int(row["decisions"]),
            restarts=int(row["restarts"]),
            resets=int(row["resets"]),
            error=row["error"],
        )


BATCH_COLUMNS = [f.name for f in fields(BatchRecord)]


def write_header(f: TextIO) -> None:
    csv.writer(f).writerow(BATCH_COLUMNS)


def append_record(f: TextIO, record: BatchRecord) -> None:
    csv.writer(f).writerow(record.to_row())
    f.flush()


def write_batch_csv(records: Iterable[BatchRecord], path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        write_header(f)
        for record in records:
            csv.writer(f).writerow(record.to_row())
    return path


def read_batch_csv(path: Path, tolerate_truncated_tail: bool = False) -> list[BatchRecord]:
    """
    Read a BatchRecord CSV.

    Args:
        path: CSV file
        tolerate_truncated_tail: Drop a malformed final row instead of failing
                                 (a batch killed mid-write leaves one behind)

    Raises:
        CactusInputError: If the file is missing, has the wrong header or a bad row
    """
    if not path.exists():
        raise CactusInputError("file not found", path)
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != BATCH_COLUMNS:
            raise CactusInputError(f"expected header {BATCH_COLUMNS}, got {reader.fieldnames}", path)
        rows = list(reader)

    records = []
    for number, row in enumerate(rows, start=1):
        try:
            records.append(BatchRecord.from_row(row))
        except ValueError as e:
            if tolerate_truncated_tail and number == len(rows):
                break
            raise CactusInputError(str(e), path, number) from e
    return records
