"""
Cactus-plot data.

For each policy, the wall times of solved runs sorted ascending, numbered 1..N.
Rows from several CSVs with the same policy are merged before sorting. Policies
appear in sorted order; a policy without solved runs contributes no rows.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Sequence

from banditsat.contexts.benchmarking.exceptions import CactusInputError
from banditsat.contexts.benchmarking.records import BatchRecord, read_batch_csv

CACTUS_COLUMNS = ["policy", "rank", "seconds"]


def cactus_rows(records: Iterable[BatchRecord]) -> list[tuple[str, int, float]]:
    solved: dict[str, list[float]] = {}
    for record in records:
        if record.solved:
            solved.setdefault(record.policy, []).append(record.wall_s)
    rows = []
    for policy in sorted(solved):
        for rank, seconds in enumerate(sorted(solved[policy]), start=1):
            rows.append((policy, rank, seconds))
    return rows


def write_cactus_csv(csv_paths: Sequence[Path], output: Path) -> list[tuple[str, int, float]]:
    """
    Merge BatchRecord CSVs into one cactus CSV.

    Raises:
        CactusInputError: If no input is given or any input is malformed
    """
    if not csv_paths:
        raise CactusInputError("no BatchRecord CSVs given")
    records = [r for path in csv_paths for r in read_batch_csv(path)]
    rows = cactus_rows(records)

    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CACTUS_COLUMNS)
        for policy, rank, seconds in rows:
            writer.writerow([policy, rank, f"{seconds:.3f}"])
    return rows
