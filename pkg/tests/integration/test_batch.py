"""Integration tests for the batch runner."""

import gzip

import numpy as np
import pytest

from banditsat.contexts.benchmarking import (
    BatchInputError,
    ERROR_VERDICT,
    find_instances,
    load_instance,
    plan_tasks,
    read_batch_csv,
    record_from_result,
    run_batch,
    run_instance,
    summarize_records,
)
from banditsat.contexts.engine import SolverConfig, solve
from banditsat.contexts.formula import write_dimacs
from banditsat.contexts.formula.generators import random_3cnf
from banditsat.utils.event_logging import get_recent_events

POLICIES = ["baseline", "fixed=0.5"]
BASE = SolverConfig(luby_unit=2)


@pytest.fixture
def bench_dir(tmp_path):
    directory = tmp_path / "bench"
    directory.mkdir()
    for i in range(10):
        formula = random_3cnf(14, 4.26, np.random.default_rng(i))
        write_dimacs(formula, directory / f"r{i:02d}.cnf", comments=[f"seed {i}"])
    return directory


def without_wall(records):
    return [(r.instance, r.policy, r.seed, r.verdict, r.conflicts, r.decisions, r.restarts, r.resets) for r in records]


@pytest.mark.integration
def test_ten_instances_two_policies(bench_dir, tmp_path):
    """Test that ten instances and two policies give twenty rows."""
    output = tmp_path / "out" / "batch.csv"
    records = run_batch(bench_dir, POLICIES, output, base_config=BASE, progress=False)

    assert len(records) == 20
    assert without_wall(read_batch_csv(output)) == without_wall(records)
    assert [r.instance for r in records[:4]] == ["r00.cnf", "r00.cnf", "r01.cnf", "r01.cnf"]
    assert all(r.verdict in ("SAT", "UNSAT") for r in records)


@pytest.mark.integration
def test_task_order_and_seeds(bench_dir):
    """Test that tasks run by instance, then policy, then seed."""
    tasks = plan_tasks(bench_dir, POLICIES, BASE, seeds=(0, 1))

    assert len(tasks) == 40
    assert [t.key for t in tasks[:4]] == [
        ("r00.cnf", "baseline", 0),
        ("r00.cnf", "baseline", 1),
        ("r00.cnf", "fixed=0.5", 0),
        ("r00.cnf", "fixed=0.5", 1),
    ]


@pytest.mark.integration
def test_run_instance_row_matches_stats_report_record(bench_dir):
    """Test that a batch row carries the same fields as the --stats record of the run."""
    config = SolverConfig.from_descriptor("fixed=0.5", BASE)
    path = bench_dir / "r03.cnf"

    row = run_instance(path, "r03.cnf", config)
    expected = record_from_result("r03.cnf", solve(load_instance(path), config), config)

    assert without_wall([row]) == without_wall([expected])
    assert row.error == ""


@pytest.mark.integration
def test_unreadable_instance_becomes_error_row(bench_dir, tmp_path):
    """Test that a malformed instance yields an ERROR row and a failure event."""
    (bench_dir / "broken.cnf").write_text("p cnf 2 1\n1 x 0\n")

    records = run_batch(bench_dir, ["baseline"], tmp_path / "b.csv", base_config=BASE, progress=False)

    (broken,) = [r for r in records if r.instance == "broken.cnf"]
    assert broken.verdict == ERROR_VERDICT
    assert "InvalidTokenError" in broken.error
    assert len(records) == 11
    assert summarize_records(records)[0].errors == 1
    assert get_recent_events(event_type="instance_failed")[-1]["instance"] == "broken.cnf"


@pytest.mark.integration
def test_resume_after_kill(bench_dir, tmp_path):
    """Test that resume completes a truncated batch without repeating rows."""
    output = tmp_path / "b.csv"
    run_batch(bench_dir, POLICIES, output, base_config=BASE, progress=False)
    full_lines = output.read_text().splitlines()

    # Simulate a kill after row 7, mid-way through writing row 8
    output.write_text("\n".join(full_lines[:8]) + "\n" + full_lines[8][:10])
    records = run_batch(bench_dir, POLICIES, output, base_config=BASE, resume=True, progress=False)

    resumed_lines = output.read_text().splitlines()
    assert len(records) == 20
    assert resumed_lines[:8] == full_lines[:8]
    assert get_recent_events(event_type="batch_started")[-1]["pending"] == 13
    assert without_wall(records) == without_wall(read_batch_csv(output))


@pytest.mark.integration
def test_two_runs_identical_modulo_wall_time(bench_dir, tmp_path):
    """Test that two batches agree on everything but wall time."""
    a = run_batch(bench_dir, POLICIES, tmp_path / "a.csv", base_config=BASE, seeds=(3,), progress=False)
    b = run_batch(bench_dir, POLICIES, tmp_path / "b.csv", base_config=BASE, seeds=(3,), progress=False)
    assert without_wall(a) == without_wall(b)


@pytest.mark.integration
def test_parallel_jobs_match_sequential(bench_dir, tmp_path):
    """Test that two jobs produce the same rows as one."""
    sequential = run_batch(bench_dir, POLICIES, tmp_path / "s.csv", base_config=BASE, progress=False)
    parallel = run_batch(bench_dir, POLICIES, tmp_path / "p.csv", base_config=BASE, jobs=2, progress=False)
    assert without_wall(parallel) == without_wall(sequential)


@pytest.mark.integration
def test_gzip_instances_found(tmp_path):
    """Test that gzip-compressed instances are found and solved."""
    directory = tmp_path / "gz"
    (directory / "nested").mkdir(parents=True)
    with gzip.open(directory / "nested" / "u.cnf.gz", "wb") as f:
        f.write(b"p cnf 1 2\n1 0\n-1 0\n")
    (directory / "s.cnf").write_text("p cnf 1 1\n1 0\n")

    assert [p.name for p in find_instances(directory)] == ["u.cnf.gz", "s.cnf"]
    records = run_batch(directory, ["baseline"], tmp_path / "g.csv", progress=False)
    assert {(r.instance, r.verdict) for r in records} == {("nested/u.cnf.gz", "UNSAT"), ("s.cnf", "SAT")}


@pytest.mark.integration
def test_batch_input_errors(tmp_path):
    """Test that a missing or empty directory raises BatchInputError."""
    with pytest.raises(BatchInputError):
        run_batch(tmp_path / "missing", ["baseline"], tmp_path / "x.csv", progress=False)
    (tmp_path / "empty").mkdir()
    with pytest.raises(BatchInputError):
        run_batch(tmp_path / "empty", ["baseline"], tmp_path / "x.csv", progress=False)
    with pytest.raises(BatchInputError):
        run_batch(tmp_path, [], tmp_path / "x.csv", progress=False)
