"""Unit tests for experiment presets and batch event logging."""

import pytest

from banditsat.contexts.benchmarking import load_experiment_presets, resolve_preset
from banditsat.contexts.engine import SolverConfig
from banditsat.utils.event_logging import get_recent_events, last_batch_progress, log_batch_event


@pytest.mark.unit
def test_presets_flattened():
    """Test that nested presets are addressed as category_name."""
    presets = load_experiment_presets()

    assert presets["sweep_fixed"] == ["baseline", "fixed=0.05", "fixed=0.1", "fixed=0.2", "fixed=0.5"]
    assert presets["compare_thompson"] == ["baseline", "thompson", "thompson-decay"]
    assert presets["dilemma"] == ["baseline", "fixed=0.5", "thompson-decay"]
    assert len(presets["sweep_partial"]) == 4


@pytest.mark.unit
def test_every_preset_descriptor_is_valid():
    """Test that every shipped preset parses and round-trips."""
    for descriptors in load_experiment_presets().values():
        for descriptor in descriptors:
            assert SolverConfig.from_descriptor(descriptor).descriptor() == descriptor


@pytest.mark.unit
def test_unknown_preset_lists_available():
    """Test that an unknown preset error lists the known ones."""
    with pytest.raises(ValueError, match="sweep_fixed"):
        resolve_preset("nope")


@pytest.mark.unit
def test_custom_presets_file(tmp_path):
    """Test reading presets from a custom YAML file."""
    path = tmp_path / "presets.yaml"
    path.write_text("mine:\n  pair: [baseline, swucb]\nsolo: [thompson]\n")

    assert resolve_preset("mine_pair", path) == ["baseline", "swucb"]
    assert resolve_preset("solo", path) == ["thompson"]


@pytest.mark.unit
def test_event_log_round_trip(tmp_path):
    """Test writing batch events and reading them back filtered."""
    events = tmp_path / "events.log"
    log_batch_event("instance_completed", "a.cnf", "bench", events_file=events, verdict="SAT")
    log_batch_event("instance_failed", "b.cnf", "bench", events_file=events, error="boom")
    with open(events, "a") as f:
        f.write('{"truncated": ')

    assert [e["instance"] for e in get_recent_events(events_file=events)] == ["a.cnf", "b.cnf"]
    (failed,) = get_recent_events(event_type="instance_failed", events_file=events)
    assert failed["error"] == "boom"
    assert get_recent_events(instance="zzz", events_file=events) == []


@pytest.mark.unit
def test_unknown_event_type_rejected(tmp_path):
    """Test that unknown event types are refused."""
    with pytest.raises(ValueError):
        log_batch_event("solved", "a.cnf", "bench", events_file=tmp_path / "e.log")


@pytest.mark.unit
def test_last_batch_progress_counts_since_latest_start(tmp_path):
    """Test that progress counts only events after the latest batch start."""
    events = tmp_path / "events.log"
    assert last_batch_progress(events) is None

    log_batch_event("batch_started", "old/", "bench", events_file=events, runs=1, pending=1)
    log_batch_event("instance_completed", "x.cnf", "bench", events_file=events)
    log_batch_event("batch_completed", "old/", "bench", events_file=events)
    log_batch_event("batch_started", "bench/", "bench", events_file=events, runs=6, pending=4)
    log_batch_event("instance_completed", "a.cnf", "bench", events_file=events)
    log_batch_event("instance_failed", "b.cnf", "bench", events_file=events)
    log_batch_event("instance_completed", "c.cnf", "bench", events_file=events)

    progress = last_batch_progress(events)
    assert progress["instance"] == "bench/"
    assert progress["pending"] == 4
    assert (progress["completed"], progress["failed"], progress["finished"]) == (2, 1, False)
