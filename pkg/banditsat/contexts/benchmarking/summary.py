"""Per-policy batch summaries (solved counts and PAR-2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from banditsat.contexts.benchmarking.records import ERROR_VERDICT, BatchRecord

DEFAULT_TIMEOUT_S = 5000.0


@dataclass(frozen=True)
class PolicySummary:
    policy: str
    runs: int
    solved: int
    sat: int
    unsat: int
    indet: int
    errors: int
    par2: float
    median_solved_s: Optional[float]


SUMMARY_COLUMNS = list(PolicySummary.__dataclass_fields__)


def par2_score(records: Iterable[BatchRecord], timeout: float) -> float:
    """Mean runtime where every unsolved run (INDET or ERROR) counts 2 * timeout."""
    times = [r.wall_s if r.solved else 2.0 * timeout for r in records]
    return float(np.mean(times)) if times else 0.0


def summarize_records(records: Iterable[BatchRecord], timeout: float = DEFAULT_TIMEOUT_S) -> list[PolicySummary]:
    """One summary per policy, policies in order of first appearance."""
    by_policy: dict[str, list[BatchRecord]] = {}
    for record in records:
        by_policy.setdefault(record.policy, []).append(record)

    out = []
    for policy, rows in by_policy.items():
        solved_times = [r.wall_s for r in rows if r.solved]
        out.append(
            PolicySummary(
                policy=policy,
                runs=len(rows),
                solved=len(solved_times),
                sat=sum(1 for r in rows if r.verdict == "SAT"),
                unsat=sum(1 for r in rows if r.verdict == "UNSAT"),
                indet=sum(1 for r in rows if r.verdict == "INDET"),
                errors=sum(1 for r in rows if r.verdict == ERROR_VERDICT),
                par2=par2_score(rows, timeout),
                median_solved_s=float(np.median(solved_times)) if solved_times else None,
            )
        )
    return out
