"""Unit tests for rw_glr, the EMA and success classification."""

import numpy as np
import pytest

from banditsat.contexts.reset import RewardTracker, classify, rw_glr


@pytest.mark.unit
@pytest.mark.parametrize("learned, decisions, expected", [(50, 100, 0.5), (0, 100, 0.0), (7, 0, 0.0)])
def test_rw_glr(learned, decisions, expected):
    """Test the learning rate of a window."""
    assert rw_glr(learned, decisions) == expected


@pytest.mark.unit
def test_first_window_initializes_ema():
    """Test that the first window seeds the EMA."""
    tracker = RewardTracker()
    assert tracker.update_ema(0.5) == 0.5
    assert tracker.windows_seen == 1


@pytest.mark.unit
def test_ema_update():
    """Test one EMA update step."""
    tracker = RewardTracker(ema_decay=0.8)
    tracker.update_ema(0.5)
    assert tracker.update_ema(1.0) == pytest.approx(0.6)


@pytest.mark.unit
def test_ema_converges_to_constant_stream():
    """Test that the EMA converges on a constant stream."""
    tracker = RewardTracker()
    tracker.update_ema(3.0)
    for _ in range(100):
        tracker.update_ema(0.25)
    assert abs(tracker.ema - 0.25) < 1e-6


@pytest.mark.unit
def test_ema_matches_closed_form():
    """Test the EMA against its closed form."""
    lam = 0.8
    values = np.random.default_rng(0).random(40)
    tracker = RewardTracker(ema_decay=lam)
    for v in values:
        tracker.update_ema(float(v))

    m = len(values)
    expected = lam ** (m - 1) * values[0] + (1 - lam) * sum(lam ** (m - 1 - i) * values[i] for i in range(1, m))
    assert abs(tracker.ema - expected) < 1e-9


@pytest.mark.unit
def test_ema_rejects_negative_values():
    """Test that negative rates are rejected."""
    with pytest.raises(ValueError):
        RewardTracker().update_ema(-0.1)


@pytest.mark.unit
def test_tracker_rejects_bad_decay():
    """Test that EMA decays outside (0, 1) are rejected."""
    with pytest.raises(ValueError):
        RewardTracker(ema_decay=1.0)


@pytest.mark.unit
@pytest.mark.parametrize("rw, ema, success", [(0.6, 0.5, True), (0.5, 0.5, False), (0.0, 0.0, False), (0.4, 0.5, False)])
def test_classify(rw, ema, success):
    """Test success classification against the EMA."""
    assert classify(rw, ema) is success


@pytest.mark.unit
def test_classify_flipped():
    """Test that the flipped classification inverts success."""
    assert classify(0.4, 0.5, flip=True) is True
    assert classify(0.6, 0.5, flip=True) is False
    assert classify(0.5, 0.5, flip=True) is False


@pytest.mark.unit
def test_windows_from_running_totals():
    """Test window rates computed from running counters."""
    tracker = RewardTracker()
    assert tracker.close_window(100, 40) == pytest.approx(0.4)
    tracker.open_window(100, 40)
    assert (tracker.window_decisions, tracker.window_learned) == (0, 0)

    assert tracker.close_window(150, 50) == pytest.approx(0.2)
    assert (tracker.window_decisions, tracker.window_learned) == (50, 10)
