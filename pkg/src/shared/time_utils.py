"""Simulated-clock helpers: block boundaries on an integer-second clock."""
from __future__ import annotations


def next_boundary(time_s: int, interval_s: int) -> int:
    """First block boundary strictly after time_s.

    Boundaries sit at exact multiples of interval_s starting at t=0.
    """
    return (time_s // interval_s + 1) * interval_s


def boundaries_between(start_s: int, end_s: int, interval_s: int) -> range:
    """Boundaries b with start_s < b <= end_s."""
    first = next_boundary(start_s, interval_s)
    return range(first, end_s + 1, interval_s)


def block_index(boundary_s: int, interval_s: int) -> int:
    return boundary_s // interval_s


def format_duration(seconds: int) -> str:
    """Compact h/m/s rendering for report footers (e.g. 4m45s)."""
    minutes, secs = divmod(seconds, 60)
    hours, minutes = divmod(minutes, 60)
    if hours:
        return f"{hours}h{minutes:02d}m{secs:02d}s"
    if minutes:
        return f"{minutes}m{secs:02d}s"
    return f"{secs}s"
