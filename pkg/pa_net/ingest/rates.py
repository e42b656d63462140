"""
Daily edge and node creation rates.

Two measurements are supported:
  interarrival  reciprocal mean gap between consecutive events of a day,
                scaled to events per active day; gaps never span an
                excluded block of hours
  count         number of events per calendar day (coarse timestamps)

Node creation time is the timestamp of a label's first incident edge.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from pa_net.errors import InvalidParameterError
from pa_net.ingest.edge_log import TemporalEdgeLog, local_hours
from pa_net.utils.time_utils import SECONDS_PER_DAY
from pa_net.debug.tools.run_debug_logger import debug_logger

RATE_METHODS = ('interarrival', 'count')


@dataclass
class RateSeries:
    daily: pd.DataFrame
    weekly: pd.DataFrame
    method: str
    active_hours: int
    tz_offset: int

    @property
    def lambda_daily(self) -> float:
        """Mean daily edge rate over days where it is defined."""
        return float(self.daily['edge_rate'].mean(skipna=True))

    @property
    def defined_days(self) -> int:
        return int(self.daily['edge_rate'].notna().sum())


def _segment_lookup(excluded: Iterable[int]) -> np.ndarray:
    """Hour of day -> id of its contiguous active run within the day (-1 if excluded)."""
    excluded = set(excluded)
    lookup = np.full(24, -1, dtype=np.int64)
    segment = -1
    previous_active = False
    for hour in range(24):
        active = hour not in excluded
        if active and not previous_active:
            segment += 1
        if active:
            lookup[hour] = segment
        previous_active = active
    return lookup


def node_first_appearances(log: TemporalEdgeLog):
    """(labels, first timestamps) for every label in the log."""
    labels = np.concatenate([log.sources, log.targets])
    times = np.concatenate([log.timestamps, log.timestamps])
    order = np.argsort(times, kind='stable')
    uniq, first = np.unique(labels[order], return_index=True)
    return uniq, times[order][first]


def _per_day(times: np.ndarray, day0: int, tz_offset: int, lookup: np.ndarray,
             method: str, active_seconds: int):
    local = times + tz_offset
    frame = pd.DataFrame({
        't': times,
        'day': local // SECONDS_PER_DAY - day0,
        'seg': lookup[(local // 3600) % 24],
    })
    counts = frame.groupby('day').size()
    if method == 'count':
        return counts, counts.astype(float)
    frame = frame.sort_values('t', kind='mergesort')
    frame['gap'] = frame.groupby(['day', 'seg'])['t'].diff()
    mean_gap = frame.groupby('day')['gap'].mean()
    with np.errstate(divide='ignore'):
        rate = (1.0 / mean_gap) * active_seconds
    rate = rate.replace([np.inf, -np.inf], np.nan)
    return counts, rate


def daily_rates(log: TemporalEdgeLog, excluded_hours: Iterable[int] = (),
                method: str = 'interarrival', start: Optional[int] = None,
                end: Optional[int] = None) -> RateSeries:
    """Per-day edge and node rates, weekly block averages and the node/edge ratio."""
    if method not in RATE_METHODS:
        raise InvalidParameterError(f"rate method must be one of {RATE_METHODS}, got {method!r}")
    log.require_timestamps('daily_rates')
    if len(log) == 0:
        raise InvalidParameterError("cannot rate an empty log")

    excluded = sorted(set(int(h) for h in excluded_hours))
    lookup = _segment_lookup(excluded)
    active_hours = 24 - len(excluded)
    if active_hours < 1:
        raise InvalidParameterError("every hour is excluded")
    active_seconds = active_hours * 3600
    tz = log.tz_offset

    keep = lookup[local_hours(log)] >= 0
    times = log.timestamps[keep]
    sub = log.subset(keep)

    first_day = (start + tz) // SECONDS_PER_DAY if start is not None else int((times.min() + tz) // SECONDS_PER_DAY)
    last_day = (end - 1 + tz) // SECONDS_PER_DAY if end is not None else int((times.max() + tz) // SECONDS_PER_DAY)
    n_days = int(last_day - first_day + 1)
    index = pd.RangeIndex(n_days, name='day_index')

    edge_count, edge_rate = _per_day(times, first_day, tz, lookup, method, active_seconds)
    _, node_times = node_first_appearances(sub)
    node_count, node_rate = _per_day(np.sort(node_times), first_day, tz, lookup, method, active_seconds)

    fill = 0.0 if method == 'count' else np.nan
    daily = pd.DataFrame(index=index)
    dates = pd.to_datetime((np.arange(n_days) + first_day) * SECONDS_PER_DAY, unit='s')
    daily['day'] = dates.strftime('%Y-%m-%d')
    daily['edge_count'] = edge_count.reindex(index, fill_value=0).astype(np.int64)
    daily['node_count'] = node_count.reindex(index, fill_value=0).astype(np.int64)
    daily['edge_rate'] = edge_rate.reindex(index).astype(float).fillna(fill)
    daily['node_rate'] = node_rate.reindex(index).astype(float).fillna(fill)
    if method == 'interarrival':
        # A day with fewer than two events has no defined rate.
        daily.loc[daily['edge_count'] < 2, 'edge_rate'] = np.nan
        daily.loc[daily['node_count'] < 2, 'node_rate'] = np.nan
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = daily['node_rate'] / daily['edge_rate']
    daily['ratio'] = ratio.where(daily['edge_rate'] > 0)
    daily['edge_rate_per_second'] = daily['edge_rate'] / active_seconds

    block = daily.index // 7
    weekly = daily.groupby(block).agg(
        week_start=('day', 'first'),
        days=('day', 'size'),
        edge_rate=('edge_rate', 'mean'),
        node_rate=('node_rate', 'mean'),
    )
    with np.errstate(divide='ignore', invalid='ignore'):
        weekly['ratio'] = (weekly['node_rate'] / weekly['edge_rate']).where(weekly['edge_rate'] > 0)
    weekly.index.name = 'week'

    series = RateSeries(daily=daily, weekly=weekly, method=method,
                        active_hours=active_hours, tz_offset=tz)
    debug_logger.log('ingest', "%s rates over %d days (%d defined): lambda_d=%.4f",
                     method, n_days, series.defined_days, series.lambda_daily)
    return series
