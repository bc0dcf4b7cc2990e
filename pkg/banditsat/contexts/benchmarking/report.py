"""Single-run statistics report (the solve command's --stats JSON)."""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from banditsat.contexts.benchmarking.records import BatchRecord
from banditsat.contexts.engine import SolveResult, SolverConfig


def record_from_result(instance: str, result: SolveResult, config: SolverConfig) -> BatchRecord:
    stats = result.stats
    return BatchRecord(
        instance=instance,
        policy=config.descriptor(),
        seed=config.seed,
        verdict=result.verdict.value,
        wall_s=stats.elapsed_s,
        conflicts=stats.conflicts,
        decisions=stats.decisions,
        restarts=stats.restarts,
        resets=stats.resets,
    )


def build_stats_report(instance: str, result: SolveResult, config: SolverConfig) -> dict:
    """
    Every BatchRecord field plus the remaining counters, the rw_glr trace
    summary and the configuration that produced the run.
    """
    record = record_from_result(instance, result, config)
    report = asdict(record)
    report.pop("error")
    stats = result.stats
    report.update(
        propagations=stats.propagations,
        learned_clauses=stats.learned_clauses,
        deleted_clauses=stats.deleted_clauses,
        rw_glr=stats.rw_glr_summary(),
        config=config.to_dict(),
    )
    return report


def write_stats_json(report: dict, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    return path
