"""Luby restart schedule."""


def luby(i: int) -> int:
    """
    i-th term (1-based) of the Luby sequence 1, 1, 2, 1, 1, 2, 4, 1, ...

    u(i) = 2^(k-1)               if i = 2^k - 1
    u(i) = u(i - 2^(k-1) + 1)    if 2^(k-1) <= i < 2^k - 1
    """
    if i < 1:
        raise ValueError(f"luby index must be >= 1, got {i}")
    while True:
        k = i.bit_length()
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i = i - (1 << (k - 1)) + 1


def restart_threshold(restarts: int, unit: int) -> int:
    """Conflicts allowed in the window that follows `restarts` completed restarts."""
    return luby(restarts + 1) * unit
