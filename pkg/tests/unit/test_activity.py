"""Unit tests for the EVSIDS activity table."""

import pytest

from banditsat.contexts.engine import ActivityTable


def never_assigned(var: int) -> bool:
    return False


@pytest.mark.unit
def test_bump_and_decay_arithmetic():
    """Test bump values and increment growth after one conflict."""
    table = ActivityTable(3, decay_factor=0.95)
    table.bump_and_decay([2])

    assert table[2] == 1.0
    assert table.bump_increment == pytest.approx(1 / 0.95)
    assert table.bump_increment == pytest.approx(1.0526, abs=1e-4)


@pytest.mark.unit
def test_rescale_trigger():
    """Test that reaching 1e100 rescales activities and the increment."""
    table = ActivityTable(2)
    table.set_activities([1e100 - 1.0, 0.5])
    table.bump_and_decay([1])

    assert table[1] == pytest.approx(1.0)
    assert table.bump_increment == pytest.approx(1e-100 / 0.95)


@pytest.mark.unit
def test_rescale_keeps_order():
    """Test that rescaling leaves the variable order unchanged."""
    table = ActivityTable(3)
    table.set_activities([2e99, 3e99, 0.0], bump_increment=9e99)
    table.bump_and_decay([1, 2])

    assert table.order() == [2, 1, 3]
    assert max(table.activity) < 10.0


@pytest.mark.unit
def test_increment_overflow_also_rescales():
    """Test that an overflowing increment triggers a rescale on its own."""
    table = ActivityTable(1, decay_factor=0.5)
    table.set_activities([0.0], bump_increment=0.6e100)
    table.bump_and_decay([])

    assert table.bump_increment == pytest.approx(1.2)


@pytest.mark.unit
def test_next_unassigned_max_activity():
    """Test that the highest-activity unassigned variable comes first."""
    table = ActivityTable(2)
    table.set_activities([0.5, 0.9])
    assert table.next_unassigned(never_assigned) == 2


@pytest.mark.unit
def test_next_unassigned_ties_lowest_index():
    """Test that equal activities break toward the lowest index."""
    table = ActivityTable(2)
    table.set_activities([0.7, 0.7])
    assert table.next_unassigned(never_assigned) == 1


@pytest.mark.unit
def test_next_unassigned_skips_assigned():
    """Test that assigned variables are skipped."""
    table = ActivityTable(2)
    table.set_activities([0.1, 0.9])
    assert table.next_unassigned(lambda v: v == 2) == 1
    assert table.next_unassigned(lambda v: True) is None


@pytest.mark.unit
def test_stale_entries_ignored_after_bump():
    """Test that heap entries with outdated activities are discarded."""
    table = ActivityTable(3)
    table.set_activities([3.0, 2.0, 1.0])
    table.bump(3)
    table.bump(3)
    table.bump(3)

    assert table.next_unassigned(never_assigned) == 3
    assert table.order() == [3, 1, 2]


@pytest.mark.unit
def test_push_restores_unassigned_variable():
    """Test that pushing a freed variable makes it selectable again."""
    table = ActivityTable(2)
    table.set_activities([0.2, 0.8])
    assigned = {2}
    # Variable 2's entry is popped while it is assigned
    assert table.next_unassigned(lambda v: v in assigned) == 1
    assigned.clear()
    table.push(2)
    assert table.next_unassigned(lambda v: v in assigned) == 2


@pytest.mark.unit
def test_heap_stays_bounded():
    """Test that repeated bumps do not grow the heap without limit."""
    table = ActivityTable(5)
    for _ in range(500):
        table.bump_and_decay([1, 2])
    assert len(table._heap) <= 4 * 5 + 64 + 2


@pytest.mark.unit
def test_top_and_order():
    """Test the top-k and full order views of the table."""
    table = ActivityTable(5)
    table.set_activities([0.3, 0.9, 0.3, 0.1, 0.95])

    assert table.order() == [5, 2, 1, 3, 4]
    assert table.top(2) == [5, 2]
    assert table.top(10) == [5, 2, 1, 3, 4]


@pytest.mark.unit
def test_set_activities_validates_length():
    """Test that set_activities needs one value per variable."""
    with pytest.raises(ValueError):
        ActivityTable(3).set_activities([1.0])


@pytest.mark.unit
def test_decay_factor_validated():
    """Test that decay factors outside (0, 1) are rejected."""
    with pytest.raises(ValueError):
        ActivityTable(3, decay_factor=1.0)
