"""Per-label degree tables from an edge log and the administration-account filter."""

from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from pa_net.ingest.edge_log import TemporalEdgeLog
from pa_net.debug.tools.run_debug_logger import debug_logger


@dataclass
class DegreeTable:
    labels: np.ndarray
    in_deg: np.ndarray
    out_deg: np.ndarray

    def __len__(self) -> int:
        return int(self.labels.size)

    @property
    def pairs(self) -> np.ndarray:
        return np.column_stack([self.in_deg, self.out_deg])

    def as_dict(self) -> dict:
        return {int(lab): (int(i), int(o)) for lab, i, o in zip(self.labels, self.in_deg, self.out_deg)}

    def subset(self, mask: np.ndarray) -> 'DegreeTable':
        return DegreeTable(self.labels[mask], self.in_deg[mask], self.out_deg[mask])


def degrees_from_log(log: TemporalEdgeLog) -> DegreeTable:
    """In/out degree of every label that appears in the log."""
    labels, inverse = np.unique(np.concatenate([log.sources, log.targets]), return_inverse=True)
    n_edges = len(log)
    out_deg = np.bincount(inverse[:n_edges], minlength=labels.size).astype(np.int64)
    in_deg = np.bincount(inverse[n_edges:], minlength=labels.size).astype(np.int64)
    return DegreeTable(labels=labels, in_deg=in_deg, out_deg=out_deg)


def admin_mask(in_deg: np.ndarray, out_deg: np.ndarray, in_min: int = 20) -> np.ndarray:
    """True for nodes that never reply but receive at least in_min edges."""
    return (np.asarray(out_deg) == 0) & (np.asarray(in_deg) >= in_min)


def remove_admin_nodes(pairs: Union[DegreeTable, np.ndarray, List[Tuple[int, int]]],
                       in_min: int = 20):
    """Drop (in, out) pairs with out = 0 and in >= in_min; returns (kept, dropped count)."""
    if isinstance(pairs, DegreeTable):
        mask = admin_mask(pairs.in_deg, pairs.out_deg, in_min)
        kept = pairs.subset(~mask)
    else:
        arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        mask = admin_mask(arr[:, 0], arr[:, 1], in_min)
        kept = arr[~mask]
    dropped = int(mask.sum())
    debug_logger.log('ingest', "admin filter (in >= %d, out = 0): %d nodes dropped", in_min, dropped)
    return kept, dropped
