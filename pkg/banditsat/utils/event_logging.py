"""
Batch event logging utilities for banditsat (Tier 2 logging).

Appends batch-harness events to a JSON Lines file so that long benchmark
campaigns can be followed (and audited after a kill/resume cycle) without
parsing Tier 1 text logs.

For detailed within-context logging (Tier 1), use banditsat.utils.logger instead.

Usage:
    from banditsat.utils.event_logging import log_batch_event, get_recent_events

    log_batch_event(
        event_type="instance_completed",
        instance="uf20-01.cnf",
        source="bench",
        policy="thompson-decay",
        verdict="SAT",
        wall_s=0.412,
    )

    events = get_recent_events(20, event_type="instance_failed")
"""

import json
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from banditsat.utils.timing import now_exact

load_dotenv()
BATCH_EVENTS_FILE = Path(os.getenv("BATCH_EVENTS_FILE", "outs/logs/batch_events.log"))

EVENT_TYPES = {"batch_started", "instance_completed", "instance_failed", "batch_completed"}


def log_batch_event(
    event_type: str,
    instance: str,
    source: str,
    events_file: Optional[Path] = None,
    **extra_fields,
) -> None:
    """
    Log an event to the batch event log.

    Events are appended in JSON Lines format (one JSON object per line).

    Args:
        event_type: One of EVENT_TYPES
        instance: Instance path or batch directory the event refers to
        source: Event source (e.g., "bench", "cli")
        events_file: Override for BATCH_EVENTS_FILE
        **extra_fields: Additional event-specific fields

    Raises:
        ValueError: If event_type is unknown
    """
    if event_type not in EVENT_TYPES:
        raise ValueError(f"Unknown event type '{event_type}'. Expected one of {sorted(EVENT_TYPES)}")

    path = events_file or BATCH_EVENTS_FILE
    path.parent.mkdir(parents=True, exist_ok=True)

    event = {
        "timestamp": now_exact(),
        "event_type": event_type,
        "instance": instance,
        "source": source,
        **extra_fields,
    }

    with open(path, "a", encoding="utf-8") as f:
        f.write(json.dumps(event) + "\n")


def get_recent_events(
    n: int = 10,
    instance: Optional[str] = None,
    event_type: Optional[str] = None,
    events_file: Optional[Path] = None,
) -> list[dict]:
    """
    Get the last n events from the batch log, optionally filtered.

    Args:
        n: Number of recent events to return (default: 10; 0 returns all)
        instance: Filter to only events for this instance (optional)
        event_type: Filter to only events of this type (optional)
        events_file: Override for BATCH_EVENTS_FILE

    Returns:
        List of event dicts (most recent last)
    """
    path = events_file or BATCH_EVENTS_FILE
    if not path.exists():
        return []

    events = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            try:
                events.append(json.loads(line.strip()))
            except json.JSONDecodeError:
                # Skip lines truncated by a killed batch
                continue

    if instance:
        events = [e for e in events if e.get("instance") == instance]

    if event_type:
        events = [e for e in events if e.get("event_type") == event_type]

    return events[-n:] if n > 0 else events


def last_batch_progress(events_file: Optional[Path] = None) -> Optional[dict]:
    """
    Progress of the most recent batch in the event log.

    Returns:
        None if no batch was ever started, else a dict with the batch_started
        event fields plus completed, failed and finished (bool)
    """
    events = get_recent_events(n=0, events_file=events_file)
    starts = [i for i, e in enumerate(events) if e.get("event_type") == "batch_started"]
    if not starts:
        return None

    started = events[starts[-1]]
    after = [e["event_type"] for e in events[starts[-1] + 1 :]]
    return {
        **started,
        "completed": after.count("instance_completed"),
        "failed": after.count("instance_failed"),
        "finished": "batch_completed" in after,
    }
