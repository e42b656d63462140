"""
Edge Log
KONECT-style temporal edge lists: '%' (or '#') comment lines, then
"src dst [weight] [timestamp]" per line. Timestamps are only present on
four-field lines.
"""

import io
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Tuple, Union

import numpy as np

from pa_net.errors import EdgeListParseError, InvalidParameterError, MissingTimestampError
from pa_net.debug.tools.run_debug_logger import debug_logger

NO_TIMESTAMP = -1


class TemporalEdge(NamedTuple):
    source: int
    target: int
    timestamp: int


@dataclass(frozen=True)
class TemporalEdgeLog:
    """Edges ordered by timestamp (stable on ties); arrays are never mutated."""
    sources: np.ndarray
    targets: np.ndarray
    weights: np.ndarray
    timestamps: np.ndarray
    tz_offset: int = 0
    malformed: Tuple[Tuple[int, str], ...] = ()
    metadata: Dict = field(default_factory=dict)

    def __len__(self) -> int:
        return int(self.sources.size)

    @property
    def has_timestamps(self) -> bool:
        return bool(self.timestamps.size == 0 or np.all(self.timestamps >= 0))

    def require_timestamps(self, operation: str):
        if not self.has_timestamps:
            raise MissingTimestampError(f"{operation} needs timestamps on every edge")

    @property
    def edges(self) -> List[TemporalEdge]:
        return [TemporalEdge(int(s), int(t), int(ts))
                for s, t, ts in zip(self.sources, self.targets, self.timestamps)]

    def subset(self, mask: np.ndarray, **metadata) -> 'TemporalEdgeLog':
        meta = dict(self.metadata)
        meta.update(metadata)
        return replace(self, sources=self.sources[mask], targets=self.targets[mask],
                       weights=self.weights[mask], timestamps=self.timestamps[mask], metadata=meta)

    def node_labels(self) -> np.ndarray:
        return np.unique(np.concatenate([self.sources, self.targets]))

    def node_total(self) -> int:
        return int(self.node_labels().size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TemporalEdgeLog):
            return NotImplemented
        return (np.array_equal(self.sources, other.sources)
                and np.array_equal(self.targets, other.targets)
                and np.array_equal(self.weights, other.weights)
                and np.array_equal(self.timestamps, other.timestamps)
                and self.tz_offset == other.tz_offset)


def _lines(source) -> Iterable[str]:
    """A bare str without a newline is a path; a missing one raises FileNotFoundError."""
    if isinstance(source, bytes):
        return io.StringIO(source.decode('utf-8'))
    if isinstance(source, Path):
        return open(source, 'r', encoding='utf-8')
    if isinstance(source, str):
        if '\n' not in source:
            return open(source, 'r', encoding='utf-8')
        return io.StringIO(source)
    if hasattr(source, 'read'):
        data = source.read()
        return io.StringIO(data.decode('utf-8') if isinstance(data, bytes) else data)
    raise InvalidParameterError(f"cannot read an edge list from {type(source).__name__}")


def parse_edge_list(source: Union[str, bytes, Path, io.IOBase], tz_offset: int = 0) -> TemporalEdgeLog:
    """Parse an edge list; malformed lines are kept with their line numbers."""
    srcs: List[int] = []
    dsts: List[int] = []
    weights: List[float] = []
    stamps: List[int] = []
    malformed: List[Tuple[int, str]] = []

    try:
        stream = _lines(source)
    except UnicodeDecodeError as e:
        raise EdgeListParseError(f"edge list is not valid UTF-8: {e.reason} at byte {e.start}") from e
    try:
        for line_no, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith('%') or line.startswith('#'):
                continue
            parts = line.split()
            if not 2 <= len(parts) <= 4:
                malformed.append((line_no, line))
                continue
            try:
                s, d = int(parts[0]), int(parts[1])
                w = float(parts[2]) if len(parts) >= 3 else 1.0
                ts = int(parts[3]) if len(parts) == 4 else NO_TIMESTAMP
            except ValueError:
                malformed.append((line_no, line))
                continue
            if len(parts) == 4 and ts < 0:
                malformed.append((line_no, line))
                continue
            srcs.append(s)
            dsts.append(d)
            weights.append(w)
            stamps.append(ts)
    except UnicodeDecodeError as e:
        raise EdgeListParseError(f"edge list is not valid UTF-8: {e.reason} at byte {e.start}",
                                 malformed) from e
    finally:
        if hasattr(stream, 'close'):
            stream.close()

    if not srcs:
        raise EdgeListParseError("no parseable edge lines", malformed)

    ts_arr = np.asarray(stamps, dtype=np.int64)
    order = np.argsort(ts_arr, kind='stable') if np.all(ts_arr >= 0) else np.arange(ts_arr.size)
    log = TemporalEdgeLog(
        sources=np.asarray(srcs, dtype=np.int64)[order],
        targets=np.asarray(dsts, dtype=np.int64)[order],
        weights=np.asarray(weights, dtype=float)[order],
        timestamps=ts_arr[order],
        tz_offset=int(tz_offset),
        malformed=tuple(malformed),
        metadata={'parsed': len(srcs), 'malformed': len(malformed)},
    )
    debug_logger.log('ingest', "parsed %d edges, %d malformed lines", len(srcs), len(malformed))
    for line_no, text in malformed[:20]:
        debug_logger.log('ingest', "  line %d: %r", line_no, text)
    return log


def serialize_edge_list(log: TemporalEdgeLog) -> str:
    """Inverse of parse_edge_list for well-formed logs."""
    out = ["% asym positive"]
    stamped = log.has_timestamps
    for s, d, w, ts in zip(log.sources, log.targets, log.weights, log.timestamps):
        fields = [str(int(s)), str(int(d)), '%.12g' % w]
        if stamped:
            fields.append(str(int(ts)))
        out.append(' '.join(fields))
    return '\n'.join(out) + '\n'


def local_hours(log: TemporalEdgeLog) -> np.ndarray:
    """Local hour of day (0..23) of every edge."""
    return ((log.timestamps + log.tz_offset) // 3600) % 24


def filter_window(log: TemporalEdgeLog, start: int, end: int,
                  excluded_hours: Iterable[int] = ()) -> TemporalEdgeLog:
    """Keep edges with start <= t < end whose local hour is not excluded."""
    if start > end:
        raise InvalidParameterError(f"inverted window: start {start} > end {end}")
    hours = sorted(set(int(h) for h in excluded_hours))
    if any(h < 0 or h > 23 for h in hours):
        raise InvalidParameterError(f"excluded hours must lie in 0..23, got {hours}")
    log.require_timestamps('filter_window')
    mask = (log.timestamps >= start) & (log.timestamps < end)
    if hours:
        mask &= ~np.isin(local_hours(log), hours)
    debug_logger.log('ingest', "window [%d, %d) excluding %s: %d of %d edges kept",
                     start, end, hours, int(mask.sum()), len(log))
    return log.subset(mask, window=(int(start), int(end)), excluded_hours=hours)


def drop_nodes(log: TemporalEdgeLog, labels) -> TemporalEdgeLog:
    """Remove every edge incident to one of the given labels."""
    labels = np.asarray(list(labels), dtype=np.int64)
    mask = ~(np.isin(log.sources, labels) | np.isin(log.targets, labels))
    return log.subset(mask, dropped_nodes=int(labels.size))
