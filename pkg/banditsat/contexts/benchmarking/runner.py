"""
Batch runner.

Runs every (instance, policy, seed) combination of a directory of DIMACS files.
Runs are independent solver instances dispatched with joblib; results come back in
task order (instances sorted by relative path, then policies as given, then seeds)
and each row is flushed as soon as it arrives, so a killed batch leaves a valid
prefix that `resume=True` completes.
"""

from __future__ import annotations

import gzip
from contextlib import contextmanager
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterator, Optional, Sequence

from joblib import Parallel, delayed
from loguru import logger
from tqdm import tqdm

from banditsat.contexts.benchmarking.exceptions import BatchInputError
from banditsat.contexts.benchmarking.logger import (
    _log_debug,
    _log_warning,
    log_batch_result,
    log_batch_start,
)
from banditsat.contexts.benchmarking.records import (
    ERROR_VERDICT,
    BatchRecord,
    append_record,
    read_batch_csv,
    write_header,
)
from banditsat.contexts.benchmarking.report import record_from_result
from banditsat.contexts.benchmarking.summary import DEFAULT_TIMEOUT_S, summarize_records
from banditsat.contexts.engine import SolverConfig, solve
from banditsat.contexts.formula import Formula, parse_dimacs
from banditsat.utils.event_logging import log_batch_event

INSTANCE_PATTERNS = ("*.cnf", "*.cnf.gz")
QUIET_MODULES = ("banditsat.contexts.engine", "banditsat.contexts.reset")


def load_instance(path: Path) -> Formula:
    """Parse a .cnf or gzip-compressed .cnf.gz file."""
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rb") as f:
        return parse_dimacs(f)


def find_instances(directory: Path) -> list[Path]:
    """
    Every .cnf / .cnf.gz file below `directory`, sorted by relative path.

    Raises:
        BatchInputError: If the directory does not exist or holds no instances
    """
    if not directory.is_dir():
        raise BatchInputError("not a readable directory", directory)
    found = {p for pattern in INSTANCE_PATTERNS for p in directory.rglob(pattern)}
    if not found:
        raise BatchInputError("no .cnf or .cnf.gz instances found in", directory)
    return sorted(found, key=lambda p: p.relative_to(directory).as_posix())


@contextmanager
def _quiet_solver_logs() -> Iterator[None]:
    for name in QUIET_MODULES:
        logger.disable(name)
    try:
        yield
    finally:
        for name in QUIET_MODULES:
            logger.enable(name)


def run_instance(path: Path, name: str, config: SolverConfig) -> BatchRecord:
    """
    Solve one instance and describe the run as a BatchRecord.

    Any failure (unreadable file, parse error, solver error) becomes an ERROR row.
    """
    try:
        with _quiet_solver_logs():
            result = solve(load_instance(path), config)
    except Exception as e:
        return BatchRecord(
            instance=name,
            policy=config.descriptor(),
            seed=config.seed,
            verdict=ERROR_VERDICT,
            wall_s=0.0,
            error=f"{type(e).__name__}: {e}".replace("\n", " "),
        )
    return record_from_result(name, result, config)


@dataclass(frozen=True)
class BatchTask:
    path: Path
    name: str
    config: SolverConfig

    @property
    def key(self) -> tuple[str, str, int]:
        return (self.name, self.config.descriptor(), self.config.seed)


def plan_tasks(
    directory: Path,
    descriptors: Sequence[str],
    base_config: SolverConfig,
    seeds: Sequence[int] = (0,),
) -> list[BatchTask]:
    """All runs of a batch in task order."""
    configs = [
        replace(SolverConfig.from_descriptor(d, base_config), seed=seed)
        for d in descriptors
        for seed in seeds
    ]
    tasks = []
    for path in find_instances(directory):
        name = path.relative_to(directory).as_posix()
        tasks.extend(BatchTask(path, name, config) for config in configs)
    return tasks


def _prepare_output(output_csv: Path, resume: bool) -> list[BatchRecord]:
    """Start a fresh CSV, or on resume rewrite the valid prefix and return it."""
    output_csv.parent.mkdir(parents=True, exist_ok=True)
    existing = []
    if resume and output_csv.exists():
        existing = read_batch_csv(output_csv, tolerate_truncated_tail=True)
    with open(output_csv, "w", newline="", encoding="utf-8") as f:
        write_header(f)
        for record in existing:
            append_record(f, record)
    return existing


def run_batch(
    directory: Path,
    descriptors: Sequence[str],
    output_csv: Path,
    base_config: Optional[SolverConfig] = None,
    seeds: Sequence[int] = (0,),
    jobs: int = 1,
    resume: bool = False,
    progress: bool = True,
) -> list[BatchRecord]:
    """
    Run a batch and write one CSV row per (instance, policy, seed).

    Args:
        directory: Directory searched recursively for .cnf / .cnf.gz files
        descriptors: Policy descriptors (e.g. ["baseline", "thompson-decay:k=10"])
        output_csv: Destination CSV, rewritten unless resuming
        base_config: Settings shared by every run (budgets, decays, ...)
        seeds: Seeds to run each combination with
        jobs: Concurrent solver runs (joblib n_jobs; -1 uses every core)
        resume: Keep rows already in `output_csv` and run only the missing keys
        progress: Show a tqdm progress bar

    Returns:
        All records of the batch (pre-existing and new) in task order

    Raises:
        BatchInputError: If the directory is unusable or no policy is given
        CactusInputError: If resuming from a CSV that is not a BatchRecord file
    """
    if not descriptors:
        raise BatchInputError("at least one policy descriptor is required")
    base_config = base_config or SolverConfig()
    tasks = plan_tasks(directory, descriptors, base_config, seeds)

    existing = _prepare_output(output_csv, resume)
    done = {r.key for r in existing}
    pending = [t for t in tasks if t.key not in done]

    instances = len({t.name for t in tasks})
    log_batch_start(directory, instances, len(tasks), len(tasks) - len(pending))
    log_batch_event(
        "batch_started",
        instance=str(directory),
        source="bench",
        policies=list(descriptors),
        seeds=list(seeds),
        runs=len(tasks),
        pending=len(pending),
        jobs=jobs,
    )

    results = Parallel(n_jobs=jobs, return_as="generator")(
        delayed(run_instance)(t.path, t.name, t.config) for t in pending
    )

    new_records = []
    with open(output_csv, "a", newline="", encoding="utf-8") as f:
        for record in tqdm(results, total=len(pending), desc="Solving", disable=not progress):
            append_record(f, record)
            new_records.append(record)
            if record.verdict == ERROR_VERDICT:
                _log_warning(f"{record.instance} [{record.policy}]: {record.error}")
                log_batch_event(
                    "instance_failed",
                    instance=record.instance,
                    source="bench",
                    policy=record.policy,
                    seed=record.seed,
                    error=record.error,
                )
            else:
                _log_debug(
                    f"{record.instance} [{record.policy}]: {record.verdict} in {record.wall_s:.3f}s"
                )
                log_batch_event(
                    "instance_completed",
                    instance=record.instance,
                    source="bench",
                    policy=record.policy,
                    seed=record.seed,
                    verdict=record.verdict,
                    wall_s=record.wall_s,
                    conflicts=record.conflicts,
                )

    by_key = {r.key: r for r in (*existing, *new_records)}
    records = [by_key[t.key] for t in tasks if t.key in by_key]

    timeout = base_config.time_limit_s or DEFAULT_TIMEOUT_S
    summaries = summarize_records(records, timeout)
    log_batch_result(summaries)
    log_batch_event(
        "batch_completed",
        instance=str(directory),
        source="bench",
        output=str(output_csv),
        runs=len(records),
        solved=sum(1 for r in records if r.solved),
    )
    return records
