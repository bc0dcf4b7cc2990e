#!/usr/bin/env python3
"""
View recent batch events from the batch events log.

Provides filtered access to the event log with options to filter by
instance and event type, and a progress view of the latest batch.
"""

import json
import sys
from typing import Optional

import typer

from banditsat.utils.event_logging import BATCH_EVENTS_FILE, get_recent_events, last_batch_progress

app = typer.Typer(help="View recent batch events")


@app.command()
def main(
    n: int = typer.Option(10, "--num", "-n", help="Number of recent events to show"),
    instance: Optional[str] = typer.Option(
        None, "--instance", "-i", help="Filter to events for this instance"
    ),
    event_type: Optional[str] = typer.Option(
        None, "--event-type", "-e", help="Filter to events of this type"
    ),
    compact: bool = typer.Option(
        False, "--compact", "-c", help="Print one event per line (no pretty formatting)"
    ),
):
    """
    Show the last n events from the batch log.

    Examples:\n

        $ tail_log.py                          # Last 10 events

        $ tail_log.py -e instance_failed       # Last 10 failures

        $ tail_log.py -n 5 -i php_7_6.cnf      # Last 5 events for one instance

        $ tail_log.py -n 20 --compact          # One line per event
    """
    events = get_recent_events(n=n, instance=instance, event_type=event_type)

    if not events:
        typer.secho("No events found", fg=typer.colors.YELLOW, err=True)
        raise typer.Exit(code=1)

    if not compact:
        filters = []
        if instance:
            filters.append(f"instance={instance}")
        if event_type:
            filters.append(f"type={event_type}")
        suffix = f" [{', '.join(filters)}]" if filters else ""
        typer.secho(f"\nShowing last {len(events)} event(s){suffix}:", fg=typer.colors.BLUE)
        typer.echo("")

    for event in events:
        if compact:
            typer.echo(json.dumps(event))
        else:
            typer.echo(json.dumps(event, indent=2))
            typer.echo("")


@app.command()
def progress():
    """
    Show how far the most recent batch got.

    After a kill, `completed + failed` rows were flushed since the batch
    started; rerun it with --resume to finish the remaining ones.

    Examples:\n

        $ tail_log.py progress
    """
    batch = last_batch_progress()
    if batch is None:
        typer.secho(f"No batch found in {BATCH_EVENTS_FILE}", fg=typer.colors.YELLOW, err=True)
        raise typer.Exit(code=1)

    done = batch["completed"] + batch["failed"]
    typer.secho(f"\nBatch over {batch['instance']}", fg=typer.colors.BLUE, bold=True)
    typer.echo(f"  Started:   {batch['timestamp']}")
    typer.echo(f"  Policies:  {', '.join(batch.get('policies', []))}")
    typer.echo(f"  Runs:      {batch.get('runs', '?')} ({batch.get('pending', '?')} pending at start)")
    typer.echo(f"  Done:      {done} ({batch['failed']} failed)")
    if batch["finished"]:
        typer.secho("  ✓ Finished", fg=typer.colors.GREEN)
    else:
        typer.secho("  ⚠ Not finished (killed or still running)", fg=typer.colors.YELLOW)


if __name__ == "__main__":
    # Default to 'main' command if no command specified
    if len(sys.argv) == 1 or (len(sys.argv) > 1 and sys.argv[1].startswith("-")):
        sys.argv.insert(1, "main")
    app()
