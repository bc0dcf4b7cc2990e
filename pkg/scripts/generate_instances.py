#!/usr/bin/env python3
"""
Benchmark Instance Generator

Writes generated DIMACS families to a directory. Output is deterministic per seed:
instance i of a family is drawn from numpy's default_rng([seed, i]).

Commands:
    random3     - Uniform random 3-CNF near the phase transition
    pigeonhole  - PHP(p, p-1) for a range of pigeon counts
    parity      - Tseitin-encoded random XOR systems (crypto-like)
    tseitin     - Parity constraints on random regular graphs (UNSAT)
    counter     - Unrolled counter reachability (structured, verification-like)
    dilemma     - Both crypto-like and structured families side by side

Examples:\n

    generate_instances.py random3 bench/random -n 50 --vars 40

    generate_instances.py dilemma bench/dilemma --count 30 --seed 7
"""

from pathlib import Path
from typing import Callable

import numpy as np
import typer
from typing_extensions import Annotated

from banditsat.contexts.formula import Formula, write_dimacs
from banditsat.contexts.formula.generators import (
    backdoor_parity,
    counter_reachability,
    guarded_counter,
    parity_instance,
    pigeonhole,
    random_3cnf,
    tseitin_parity,
)

app = typer.Typer(
    help="Generate DIMACS benchmark families",
    invoke_without_command=True,
)


@app.callback()
def main(ctx: typer.Context):
    """Show help by default when no command is provided."""
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit()


def write_family(
    output_dir: Path,
    prefix: str,
    count: int,
    seed: int,
    build: Callable[[int, np.random.Generator], tuple[Formula, str]],
) -> list[Path]:
    """Write `count` instances named {prefix}_{i:03d}.cnf, each with its own seeded rng."""
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        formula, description = build(i, rng)
        path = output_dir / f"{prefix}_{i:03d}.cnf"
        write_dimacs(formula, path, comments=[description, f"seed {seed} index {i}"])
        written.append(path)
    return written


def report(paths: list[Path], output_dir: Path) -> None:
    typer.secho(f"✓ Wrote {len(paths)} instances", fg=typer.colors.GREEN, bold=True)
    typer.echo(f"  Output: {output_dir}")


@app.command("random3")
def random3_command(
    output_dir: Annotated[Path, typer.Argument(help="Destination directory")],
    count: Annotated[int, typer.Option("--count", "-n", help="Number of instances", min=1)] = 30,
    num_vars: Annotated[int, typer.Option("--vars", help="Variables per instance", min=3)] = 50,
    ratio: Annotated[float, typer.Option("--ratio", help="Clause/variable ratio")] = 4.26,
    seed: Annotated[int, typer.Option("--seed", help="Family seed")] = 0,
):
    """
    Uniform random 3-CNF.

    Examples:\n

        $ generate_instances.py random3 bench/random -n 100 --vars 60
    """
    paths = write_family(
        output_dir,
        "random3",
        count,
        seed,
        lambda i, rng: (random_3cnf(num_vars, ratio, rng), f"random 3-CNF n={num_vars} ratio={ratio}"),
    )
    report(paths, output_dir)


@app.command("pigeonhole")
def pigeonhole_command(
    output_dir: Annotated[Path, typer.Argument(help="Destination directory")],
    smallest: Annotated[int, typer.Option("--from", help="Smallest pigeon count", min=2)] = 3,
    largest: Annotated[int, typer.Option("--to", help="Largest pigeon count", min=2)] = 7,
):
    """
    PHP(p, p-1) for p in [--from, --to]. Always UNSAT.

    Examples:\n

        $ generate_instances.py pigeonhole bench/php --from 4 --to 8
    """
    if largest < smallest:
        typer.secho("Error: --to must be at least --from", fg=typer.colors.RED, err=True)
        raise typer.Exit(code=1)
    output_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for pigeons in range(smallest, largest + 1):
        path = output_dir / f"php_{pigeons}_{pigeons - 1}.cnf"
        write_dimacs(pigeonhole(pigeons, pigeons - 1), path, comments=[f"pigeonhole {pigeons} into {pigeons - 1}"])
        paths.append(path)
    report(paths, output_dir)


def _parity(num_vars: int, width: int, unsat_every: int) -> Callable[[int, np.random.Generator], tuple[Formula, str]]:
    def build(i: int, rng: np.random.Generator) -> tuple[Formula, str]:
        satisfiable = unsat_every == 0 or (i + 1) % unsat_every != 0
        equations = num_vars if satisfiable else num_vars + 2
        formula = parity_instance(num_vars, equations, width, rng, satisfiable=satisfiable)
        return formula, f"parity n={num_vars} equations={equations} width={width}"

    return build


def _counter(bits: int, steps: int, driven: bool) -> Callable[[int, np.random.Generator], tuple[Formula, str]]:
    def build(i: int, rng: np.random.Generator) -> tuple[Formula, str]:
        target = int(rng.integers(0, min(1 << bits, 2 * steps + 1)))
        formula = counter_reachability(bits, steps, target, driven=driven)
        return formula, f"counter bits={bits} steps={steps} target={target} driven={driven}"

    return build


def _backdoor(vertices: int) -> Callable[[int, np.random.Generator], tuple[Formula, str]]:
    def build(i: int, rng: np.random.Generator) -> tuple[Formula, str]:
        return backdoor_parity(vertices, rng), f"backdoor parity vertices={vertices} degree=4"

    return build


def _guarded(bits: int, steps: int, pigeons: int) -> Callable[[int, np.random.Generator], tuple[Formula, str]]:
    def build(i: int, rng: np.random.Generator) -> tuple[Formula, str]:
        target = int(rng.integers(steps // 2, steps + 1))
        formula = guarded_counter(bits, steps, target, pigeons, rng)
        return formula, f"guarded counter bits={bits} steps={steps} target={target} pigeons={pigeons}"

    return build


@app.command("parity")
def parity_command(
    output_dir: Annotated[Path, typer.Argument(help="Destination directory")],
    count: Annotated[int, typer.Option("--count", "-n", help="Number of instances", min=1)] = 30,
    num_vars: Annotated[int, typer.Option("--vars", help="Base (hidden) variables", min=2)] = 40,
    width: Annotated[int, typer.Option("--width", help="Variables per XOR equation", min=2)] = 4,
    unsat_every: Annotated[
        int, typer.Option("--unsat-every", help="Every k-th instance gets random right-hand sides (0: never)")
    ] = 3,
    seed: Annotated[int, typer.Option("--seed", help="Family seed")] = 0,
):
    """
    Crypto-like family: random XOR systems Tseitin-encoded to 3-CNF.

    Examples:\n

        $ generate_instances.py parity bench/parity --vars 60 --width 5
    """
    paths = write_family(output_dir, "parity", count, seed, _parity(num_vars, width, unsat_every))
    report(paths, output_dir)


@app.command("tseitin")
def tseitin_command(
    output_dir: Annotated[Path, typer.Argument(help="Destination directory")],
    count: Annotated[int, typer.Option("--count", "-n", help="Number of instances", min=1)] = 30,
    vertices: Annotated[int, typer.Option("--vertices", help="Graph vertices", min=5)] = 20,
    degree: Annotated[int, typer.Option("--degree", help="Vertex degree", min=3)] = 4,
    seed: Annotated[int, typer.Option("--seed", help="Family seed")] = 0,
):
    """
    Parity constraints on random regular graphs with odd total charge. Always UNSAT.

    Examples:\n

        $ generate_instances.py tseitin bench/tseitin --vertices 30
    """
    if (vertices * degree) % 2:
        typer.secho("Error: --vertices times --degree must be even", fg=typer.colors.RED, err=True)
        raise typer.Exit(code=1)
    paths = write_family(
        output_dir,
        "tseitin",
        count,
        seed,
        lambda i, rng: (tseitin_parity(vertices, rng, degree), f"tseitin vertices={vertices} degree={degree}"),
    )
    report(paths, output_dir)


@app.command("counter")
def counter_command(
    output_dir: Annotated[Path, typer.Argument(help="Destination directory")],
    count: Annotated[int, typer.Option("--count", "-n", help="Number of instances", min=1)] = 30,
    bits: Annotated[int, typer.Option("--bits", help="Counter width", min=1)] = 8,
    steps: Annotated[int, typer.Option("--steps", help="Unrolled steps", min=1)] = 40,
    driven: Annotated[bool, typer.Option("--driven", help="Increment only when a free input bit is set")] = False,
    seed: Annotated[int, typer.Option("--seed", help="Family seed")] = 0,
):
    """
    Structured family: bounded reachability of an unrolled binary counter.

    Targets above --steps are unreachable, so roughly half the family is UNSAT.

    Examples:\n

        $ generate_instances.py counter bench/counter --bits 10 --steps 60 --driven
    """
    paths = write_family(output_dir, "counter", count, seed, _counter(bits, steps, driven))
    report(paths, output_dir)


@app.command("dilemma")
def dilemma_command(
    output_dir: Annotated[Path, typer.Argument(help="Destination directory (crypto/ and structured/ inside)")],
    count: Annotated[int, typer.Option("--count", "-n", help="Instances per family", min=1)] = 30,
    vertices: Annotated[int, typer.Option("--vertices", help="Parity core graph vertices (even)", min=6)] = 40,
    bits: Annotated[int, typer.Option("--bits", help="Counter width", min=2)] = 5,
    steps: Annotated[int, typer.Option("--steps", help="Unrolled counter steps", min=2)] = 16,
    pigeons: Annotated[int, typer.Option("--pigeons", help="Pigeons in the structured family's core", min=3)] = 7,
    seed: Annotated[int, typer.Option("--seed", help="Family seed")] = 0,
):
    """
    Crypto-like and structured families for the restart/reset comparison.

    crypto/ holds backdoor parity instances: the default branch is stuck refuting
    a Tseitin core, and randomized activities find the one-variable way out.
    structured/ holds guarded counters: the default branch stays on the
    satisfiable counter, and randomized activities wander into a pigeonhole core.

    Run each subdirectory through `run_solver.py batch --preset dilemma` and compare.

    Examples:\n

        $ generate_instances.py dilemma bench/dilemma --count 30
    """
    if vertices % 2 or steps >= (1 << bits):
        typer.secho("Error: --vertices must be even and --steps must fit in --bits", fg=typer.colors.RED, err=True)
        raise typer.Exit(code=1)
    crypto = write_family(output_dir / "crypto", "backdoor", count, seed, _backdoor(vertices))
    structured = write_family(output_dir / "structured", "guarded", count, seed, _guarded(bits, steps, pigeons))
    report(crypto + structured, output_dir)


if __name__ == "__main__":
    app()
