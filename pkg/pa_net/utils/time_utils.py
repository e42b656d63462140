"""Date and hour-range helpers for dataset windows in a fixed local offset."""

from datetime import date, datetime, timezone
from typing import Tuple, Union

from pa_net.errors import InvalidParameterError

SECONDS_PER_DAY = 86400


def parse_local_date(value: Union[str, date], tz_offset: int = 0) -> int:
    """Epoch seconds of local midnight on the given YYYY-MM-DD date."""
    if isinstance(value, str):
        try:
            value = datetime.strptime(value.strip(), '%Y-%m-%d').date()
        except ValueError as e:
            raise InvalidParameterError(f"bad date {value!r}, expected YYYY-MM-DD") from e
    midnight_utc = datetime(value.year, value.month, value.day, tzinfo=timezone.utc)
    return int(midnight_utc.timestamp()) - int(tz_offset)


def window_bounds(start: str, end: str, tz_offset: int = 0) -> Tuple[int, int]:
    """[start 00:00, day after end 00:00) in local time, as epoch seconds."""
    lo = parse_local_date(start, tz_offset)
    hi = parse_local_date(end, tz_offset) + SECONDS_PER_DAY
    if lo > hi:
        raise InvalidParameterError(f"window start {start} is after end {end}")
    return lo, hi


def window_days(start: str, end: str) -> int:
    """Number of calendar days in the inclusive range start..end."""
    lo, hi = window_bounds(start, end)
    return (hi - lo) // SECONDS_PER_DAY


def parse_hour_range(spec: str) -> Tuple[int, ...]:
    """'1-8' -> local hours 1..7; empty or 'none' -> no hours."""
    if spec is None or not str(spec).strip() or str(spec).strip().lower() == 'none':
        return ()
    try:
        lo, hi = (int(part) for part in str(spec).split('-', 1))
    except ValueError as e:
        raise InvalidParameterError(f"bad hour range {spec!r}, expected H1-H2") from e
    if not 0 <= lo < hi <= 24:
        raise InvalidParameterError(f"hour range must satisfy 0 <= H1 < H2 <= 24, got {spec!r}")
    return tuple(range(lo, hi))
