"""
Exact linear preferential sampling.

P(v) = (D_v + delta) / (E + delta * N) is drawn as a two-part mixture:
with probability E / (E + delta * N) a uniform entry of the endpoint array,
otherwise a uniform node id. One uniform variate decides both the branch
and the index.
"""

from typing import Optional

import numpy as np

from pa_net.errors import InvalidParameterError
from pa_net.graph.degree_state import BatchSnapshot, DegreeState, RngStream


def _frame(state: DegreeState, snapshot: Optional[BatchSnapshot]):
    if snapshot is None:
        return state.edge_total, state.node_count
    return snapshot.edge_total, snapshot.node_count


def _draw_one(endpoints: np.ndarray, edges: int, nodes: int, delta: float, u: float) -> int:
    x = u * (edges + delta * nodes)
    if x < edges:
        return int(endpoints[int(x)])
    return min(1 + int((x - edges) / delta), nodes)


def _draw_many(endpoints: np.ndarray, edges: int, nodes: int, delta: float, u: np.ndarray) -> np.ndarray:
    x = u * (edges + delta * nodes)
    out = np.empty(x.shape[0], dtype=np.int64)
    hit = x < edges
    out[hit] = endpoints[x[hit].astype(np.int64)]
    miss = ~hit
    out[miss] = np.minimum(1 + ((x[miss] - edges) / delta).astype(np.int64), nodes)
    return out


def sample_in_target(state: DegreeState, delta_in: float, rng: RngStream,
                     snapshot: Optional[BatchSnapshot] = None) -> int:
    """Node chosen with probability (I_v + delta_in) / (edge_total + delta_in * node_count)."""
    if not delta_in > 0:
        raise InvalidParameterError(f"delta_in must be positive, got {delta_in}")
    edges, nodes = _frame(state, snapshot)
    return _draw_one(state._in_ep, edges, nodes, delta_in, rng.uniform())


def sample_out_source(state: DegreeState, delta_out: float, rng: RngStream,
                      snapshot: Optional[BatchSnapshot] = None) -> int:
    """Node chosen with probability (O_v + delta_out) / (edge_total + delta_out * node_count)."""
    if not delta_out > 0:
        raise InvalidParameterError(f"delta_out must be positive, got {delta_out}")
    edges, nodes = _frame(state, snapshot)
    return _draw_one(state._out_ep, edges, nodes, delta_out, rng.uniform())


def sample_in_targets(state: DegreeState, delta_in: float, size: int, rng: RngStream,
                      snapshot: Optional[BatchSnapshot] = None) -> np.ndarray:
    """size iid in-targets against the current or frozen weights."""
    edges, nodes = _frame(state, snapshot)
    return _draw_many(state._in_ep, edges, nodes, delta_in, rng.gen.random(size))


def sample_out_sources(state: DegreeState, delta_out: float, size: int, rng: RngStream,
                       snapshot: Optional[BatchSnapshot] = None) -> np.ndarray:
    edges, nodes = _frame(state, snapshot)
    return _draw_many(state._out_ep, edges, nodes, delta_out, rng.gen.random(size))


def attachment_probabilities(state: DegreeState, delta: float, direction: str = 'in') -> np.ndarray:
    """Exact target law over nodes 1..N (index 0 is node 1)."""
    degrees = state.in_degrees if direction == 'in' else state.out_degrees
    weights = degrees.astype(float) + delta
    return weights / (state.edge_total + delta * state.node_count)
