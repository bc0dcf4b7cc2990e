#!/usr/bin/env python3
"""
SAT Solver CLI

Solves DIMACS CNF instances with bandit-driven reset policies and runs benchmark
batches over instance directories.

Commands:
    solve    - Solve one instance (SAT-competition output, exit 10/20/0)
    batch    - Run every instance x policy x seed of a directory into a CSV
    cactus   - Turn batch CSVs into cactus-plot data
    summary  - Per-policy solved counts and PAR-2 from batch CSVs
    presets  - List experiment presets

Examples:\n

    run_solver.py solve data/instances/fixtures/small_sat.cnf

    run_solver.py solve instance.cnf --policy thompson-decay --partial-k 10 --stats stats.json

    run_solver.py batch bench/ --policy baseline --policy fixed=0.2 -o outs/batch.csv --jobs 4

    run_solver.py batch bench/ --preset sweep_fixed -o outs/sweep.csv --resume

    run_solver.py cactus outs/batch.csv outs/sweep.csv -o outs/cactus.csv
"""

import sys
from pathlib import Path
from typing import Optional

import click
import typer
from typing_extensions import Annotated

from banditsat.contexts.benchmarking import (
    DEFAULT_TIMEOUT_S,
    SUMMARY_COLUMNS,
    build_stats_report,
    load_experiment_presets,
    load_instance,
    read_batch_csv,
    resolve_preset,
    run_batch,
    summarize_records,
    write_cactus_csv,
    write_stats_json,
)
from banditsat.contexts.benchmarking.logger import setup_bench_logger
from banditsat.contexts.engine import (
    InvariantViolation,
    SolverConfig,
    Solver,
    load_solver_config,
)
from banditsat.contexts.engine.logger import setup_engine_logger
from banditsat.contexts.formula import Verdict, evaluate
from banditsat.contexts.reset import write_window_trace
from banditsat.utils.logger import session_log_dir

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_UNKNOWN = 0
EXIT_ERROR = 1
MODEL_LINE_WIDTH = 78


def fail(message: str) -> None:
    """Print a red error to stderr and exit with code 1."""
    typer.secho(f"Error: {message}", fg=typer.colors.RED, err=True)
    raise typer.Exit(code=EXIT_ERROR)


def build_config(
    policy: str,
    decay: Optional[float] = None,
    ema_decay: Optional[float] = None,
    window: Optional[int] = None,
    explore: Optional[float] = None,
    partial_k: Optional[str] = None,
    seed: Optional[int] = None,
    timeout: Optional[float] = None,
    max_conflicts: Optional[int] = None,
    flip_success: bool = False,
    config_path: Optional[Path] = None,
) -> SolverConfig:
    """Merge YAML defaults, explicit flags and the policy descriptor into a SolverConfig."""
    policy_overrides = {
        key: value
        for key, value in {"decay": decay, "window": window, "explore": explore}.items()
        if value is not None
    }
    overrides = {
        key: value
        for key, value in {
            "ema_decay": ema_decay,
            "seed": seed,
            "time_limit_s": timeout,
            "max_conflicts": max_conflicts,
        }.items()
        if value is not None
    }
    if policy_overrides:
        overrides["policy"] = policy_overrides
    if flip_success:
        overrides["flip_success"] = True

    config = load_solver_config(overrides, config_path)
    config = SolverConfig.from_descriptor(policy, config)
    if partial_k is not None:
        config = SolverConfig.from_descriptor(f"{config.policy.descriptor()}:k={partial_k}", config)
    return config


def model_lines(literals: list[int]) -> list[str]:
    """SAT-competition 'v' lines, terminated by a final 0."""
    lines, current = [], "v"
    for token in [*(str(lit) for lit in literals), "0"]:
        if len(current) + 1 + len(token) > MODEL_LINE_WIDTH:
            lines.append(current)
            current = "v"
        current += f" {token}"
    lines.append(current)
    return lines


app = typer.Typer(
    help="CDCL SAT solver with bandit-driven restart/reset policies",
    invoke_without_command=True,
)


@app.callback()
def main(ctx: typer.Context):
    """Show help by default when no command is provided."""
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit()


@app.command("solve")
def solve_command(
    path: Annotated[Path, typer.Argument(help="DIMACS CNF file (.cnf or .cnf.gz)")],
    policy: Annotated[
        str,
        typer.Option(
            "--policy",
            help="baseline | fixed=<p> | thompson | thompson-decay | swucb (optional ':k=<k>')",
        ),
    ] = "baseline",
    decay: Annotated[
        Optional[float], typer.Option("--decay", help="Thompson shape-parameter decay d (default 0.8)")
    ] = None,
    ema_decay: Annotated[
        Optional[float], typer.Option("--ema-decay", help="EMA decay lambda (default 0.8)")
    ] = None,
    window: Annotated[
        Optional[int], typer.Option("--window", help="SW-UCB window size tau (default 30)")
    ] = None,
    explore: Annotated[
        Optional[float], typer.Option("--explore", help="SW-UCB exploration constant c (default 0.2)")
    ] = None,
    partial_k: Annotated[
        Optional[str],
        typer.Option("--partial-k", help="Keep the top-k order on reset ('all' never resets; default: full reset)"),
    ] = None,
    seed: Annotated[int, typer.Option("--seed", help="Random seed", min=0)] = 0,
    timeout: Annotated[
        float, typer.Option("--timeout", help="Wall-time budget in seconds")
    ] = DEFAULT_TIMEOUT_S,
    max_conflicts: Annotated[
        Optional[int], typer.Option("--max-conflicts", help="Conflict budget")
    ] = None,
    stats: Annotated[
        Optional[Path], typer.Option("--stats", help="Write run statistics as JSON")
    ] = None,
    trace: Annotated[
        Optional[Path], typer.Option("--trace", help="Write the per-window reset trace as CSV")
    ] = None,
    flip_success: Annotated[
        bool,
        typer.Option("--flip-success", help="Count a window as success when rw_glr < EMA"),
    ] = False,
    config_path: Annotated[
        Optional[Path], typer.Option("--config", help="Solver defaults YAML")
    ] = None,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Show restart boundaries on stderr")
    ] = False,
):
    """
    Solve one instance.

    Prints 's SATISFIABLE' with 'v' model lines, 's UNSATISFIABLE' or 's UNKNOWN'
    and exits with 10, 20 or 0. Logs go to stderr and outs/logs.

    Examples:\n

        $ run_solver.py solve small.cnf                            # Baseline CDCL

        $ run_solver.py solve small.cnf --policy fixed=0.2 --seed 3

        $ run_solver.py solve small.cnf --policy swucb --trace windows.csv
    """
    try:
        config = build_config(
            policy,
            decay=decay,
            ema_decay=ema_decay,
            window=window,
            explore=explore,
            partial_k=partial_k,
            seed=seed,
            timeout=timeout,
            max_conflicts=max_conflicts,
            flip_success=flip_success,
            config_path=config_path,
        )
    except ValueError as e:
        fail(str(e))

    setup_engine_logger(
        session_log_dir("solve"),
        console=sys.stderr,
        extra={"Instance": path, "Policy": config.descriptor(), "Seed": config.seed},
        console_level="DEBUG" if verbose else "INFO",
    )

    try:
        formula = load_instance(path)
    except (OSError, ValueError) as e:
        fail(f"cannot read {path}: {e}")

    try:
        result = Solver(formula, config).solve()
    except InvariantViolation as e:
        fail(f"internal error: {e}")

    if stats is not None:
        write_stats_json(build_stats_report(str(path), result, config), stats)
    if trace is not None:
        write_window_trace(result.windows, trace)

    if result.verdict is Verdict.SAT:
        if not evaluate(formula, result.model):
            fail("model check failed")
        typer.echo("s SATISFIABLE")
        for line in model_lines(result.outcome.model_literals()):
            typer.echo(line)
        raise typer.Exit(code=EXIT_SAT)
    if result.verdict is Verdict.UNSAT:
        typer.echo("s UNSATISFIABLE")
        raise typer.Exit(code=EXIT_UNSAT)
    typer.echo("s UNKNOWN")
    raise typer.Exit(code=EXIT_UNKNOWN)


@app.command("batch")
def batch_command(
    directory: Annotated[Path, typer.Argument(help="Directory of .cnf / .cnf.gz instances")],
    output: Annotated[Path, typer.Option("--output", "-o", help="BatchRecord CSV to write")],
    policies: Annotated[
        Optional[list[str]],
        typer.Option("--policy", "-p", help="Policy descriptor (repeatable)"),
    ] = None,
    preset: Annotated[
        Optional[str], typer.Option("--preset", help="Named policy list from experiment_presets.yaml")
    ] = None,
    seeds: Annotated[
        Optional[list[int]], typer.Option("--seed", help="Seed (repeatable, default 0)")
    ] = None,
    jobs: Annotated[int, typer.Option("--jobs", "-j", help="Parallel solver runs")] = 1,
    timeout: Annotated[
        float, typer.Option("--timeout", help="Wall-time budget per run in seconds")
    ] = DEFAULT_TIMEOUT_S,
    max_conflicts: Annotated[
        Optional[int], typer.Option("--max-conflicts", help="Conflict budget per run")
    ] = None,
    resume: Annotated[
        bool, typer.Option("--resume", help="Keep existing rows and run only missing ones")
    ] = False,
    config_path: Annotated[
        Optional[Path], typer.Option("--config", help="Solver defaults YAML")
    ] = None,
    no_progress: Annotated[bool, typer.Option("--no-progress", help="Hide the progress bar")] = False,
):
    """
    Run a benchmark batch.

    One row per (instance, policy, seed), flushed as it completes. Unreadable
    instances become ERROR rows. A killed batch continues with --resume.

    Examples:\n

        $ run_solver.py batch bench/ -p baseline -p thompson-decay -o outs/cmp.csv

        $ run_solver.py batch bench/ --preset sweep_partial -o outs/partial.csv -j 8
    """
    try:
        descriptors = list(policies or [])
        if preset:
            descriptors.extend(resolve_preset(preset))
        if not descriptors:
            fail("give at least one --policy or a --preset")
        base = build_config(
            "baseline", timeout=timeout, max_conflicts=max_conflicts, config_path=config_path
        )
        for descriptor in descriptors:
            SolverConfig.from_descriptor(descriptor, base)
    except ValueError as e:
        fail(str(e))

    setup_bench_logger(session_log_dir("batch"), descriptors, jobs)

    try:
        records = run_batch(
            directory,
            descriptors,
            output,
            base_config=base,
            seeds=seeds or [0],
            jobs=jobs,
            resume=resume,
            progress=not no_progress,
        )
    except ValueError as e:
        fail(str(e))

    typer.secho(f"✓ {len(records)} runs recorded", fg=typer.colors.GREEN, bold=True)
    typer.echo(f"  Output: {output}")


@app.command("cactus")
def cactus_command(
    csv_paths: Annotated[list[Path], typer.Argument(help="BatchRecord CSVs to merge")],
    output: Annotated[Path, typer.Option("--output", "-o", help="Cactus CSV to write")],
):
    """
    Write cactus-plot data: per policy, solved-run times sorted with their rank.

    Examples:\n

        $ run_solver.py cactus outs/a.csv outs/b.csv -o outs/cactus.csv
    """
    try:
        rows = write_cactus_csv(csv_paths, output)
    except ValueError as e:
        fail(str(e))

    policies = sorted({policy for policy, _, _ in rows})
    typer.secho(f"✓ {len(rows)} solved runs over {len(policies)} policies", fg=typer.colors.GREEN)
    typer.echo(f"  Output: {output}")


@app.command("summary")
def summary_command(
    csv_paths: Annotated[list[Path], typer.Argument(help="BatchRecord CSVs")],
    timeout: Annotated[
        float, typer.Option("--timeout", help="Timeout used by the runs (PAR-2 penalty is twice this)")
    ] = DEFAULT_TIMEOUT_S,
):
    """
    Print solved counts and PAR-2 per policy.

    Examples:\n

        $ run_solver.py summary outs/sweep.csv --timeout 60
    """
    try:
        records = [r for path in csv_paths for r in read_batch_csv(path)]
    except ValueError as e:
        fail(str(e))

    summaries = summarize_records(records, timeout)
    typer.echo(f"{'policy':<24} {'runs':>5} {'solved':>6} {'sat':>5} {'unsat':>5} {'indet':>5} {'error':>5} {'par2':>10}")
    for s in summaries:
        typer.echo(
            f"{s.policy:<24} {s.runs:>5} {s.solved:>6} {s.sat:>5} {s.unsat:>5} "
            f"{s.indet:>5} {s.errors:>5} {s.par2:>10.3f}"
        )
    if not summaries:
        typer.echo("(no records)")
    typer.echo(f"\nColumns: {', '.join(SUMMARY_COLUMNS)}", err=True)


@app.command("presets")
def presets_command():
    """
    List experiment presets and their policies.

    Examples:\n

        $ run_solver.py presets
    """
    for name, descriptors in load_experiment_presets().items():
        typer.secho(name, bold=True)
        for descriptor in descriptors:
            typer.echo(f"  {descriptor}")


def run(argv: Optional[list[str]] = None) -> int:
    """Run the app and return the process exit code. Usage errors give 1, not click's 2."""
    try:
        code = app(args=argv, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR
    except click.Abort:
        return EXIT_ERROR
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    sys.exit(run())
