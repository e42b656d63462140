"""
Degree State
Per-node in/out degrees of a growing directed multigraph, plus the endpoint
arrays that make linear preferential sampling an O(1) draw.
"""

from dataclasses import dataclass, asdict
from typing import Dict, List, Optional, Tuple

import numpy as np

from pa_net.errors import InvalidParameterError, NodeIdError, PANetError

_INITIAL_CAPACITY = 1024
_UNIFORM_BLOCK = 4096


@dataclass(frozen=True)
class ModelParams:
    """(p, delta_in, delta_out) and, for the Poisson model, the batch rate lam."""
    p: float
    delta_in: float
    delta_out: float
    lam: Optional[float] = None

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise InvalidParameterError(f"p must lie in (0, 1), got {self.p}")
        if not self.delta_in > 0.0:
            raise InvalidParameterError(f"delta_in must be positive, got {self.delta_in}")
        if not self.delta_out > 0.0:
            raise InvalidParameterError(f"delta_out must be positive, got {self.delta_out}")
        if self.lam is not None and not self.lam > 0.0:
            raise InvalidParameterError(f"lambda must be positive when present, got {self.lam}")

    @property
    def is_poisson(self) -> bool:
        return self.lam is not None

    def to_dict(self) -> Dict:
        return asdict(self)


class RngStream:
    """
    Deterministic random stream over numpy's PCG64.
    Scalar uniforms are served from a pre-drawn block so the sequential
    engine does not pay a generator call per draw.
    """

    def __init__(self, seed: int):
        if seed < 0 or seed >= 2 ** 64:
            raise InvalidParameterError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self.gen = np.random.Generator(np.random.PCG64(self.seed))
        self._block: List[float] = []
        self._pos = 0

    def uniform(self) -> float:
        if self._pos >= len(self._block):
            self._block = self.gen.random(_UNIFORM_BLOCK).tolist()
            self._pos = 0
        u = self._block[self._pos]
        self._pos += 1
        return u

    def spawn(self, n: int) -> List['RngStream']:
        return [RngStream(s) for s in replication_seeds(self.seed, n)]


def replication_seeds(seed: int, reps: int) -> List[int]:
    """Independent 64-bit seeds for replications 0..reps-1 of one run."""
    children = np.random.SeedSequence(int(seed)).spawn(int(reps))
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


@dataclass(frozen=True)
class BatchSnapshot:
    """Edge and node counts frozen at a batch boundary; samplers index only the endpoint prefix it records."""
    node_count: int
    edge_total: int


class DegreeState:
    """
    Growing directed multigraph summarized by degrees.
    Node ids are 1-based; index 0 of the degree arrays is unused and stays 0.
    Starts as G(0): Node 1 with a self-loop, I_1 = O_1 = 1.
    """

    def __init__(self, capacity: int = _INITIAL_CAPACITY):
        capacity = max(int(capacity), 2)
        self._in_deg = np.zeros(capacity + 1, dtype=np.int64)
        self._out_deg = np.zeros(capacity + 1, dtype=np.int64)
        self._in_ep = np.zeros(capacity, dtype=np.int64)
        self._out_ep = np.zeros(capacity, dtype=np.int64)
        self.node_count = 1
        self.edge_total = 1
        self._in_deg[1] = 1
        self._out_deg[1] = 1
        self._in_ep[0] = 1
        self._out_ep[0] = 1

    # Views

    @property
    def in_deg(self) -> np.ndarray:
        """In-degrees indexed by node id (position 0 unused)."""
        return self._in_deg[:self.node_count + 1]

    @property
    def out_deg(self) -> np.ndarray:
        return self._out_deg[:self.node_count + 1]

    @property
    def in_degrees(self) -> np.ndarray:
        """Dense in-degrees of nodes 1..node_count."""
        return self._in_deg[1:self.node_count + 1]

    @property
    def out_degrees(self) -> np.ndarray:
        return self._out_deg[1:self.node_count + 1]

    @property
    def in_endpoints(self) -> np.ndarray:
        return self._in_ep[:self.edge_total]

    @property
    def out_endpoints(self) -> np.ndarray:
        return self._out_ep[:self.edge_total]

    def degree_pairs(self) -> np.ndarray:
        """(node_count, 2) array of (in, out) per node."""
        return np.column_stack([self.in_degrees, self.out_degrees])

    def node_degree(self, node_id: int) -> Tuple[int, int]:
        self._check_id(node_id)
        return int(self._in_deg[node_id]), int(self._out_deg[node_id])

    def snapshot(self) -> BatchSnapshot:
        return BatchSnapshot(node_count=self.node_count, edge_total=self.edge_total)

    def copy(self) -> 'DegreeState':
        clone = DegreeState.__new__(DegreeState)
        clone._in_deg = self._in_deg.copy()
        clone._out_deg = self._out_deg.copy()
        clone._in_ep = self._in_ep.copy()
        clone._out_ep = self._out_ep.copy()
        clone.node_count = self.node_count
        clone.edge_total = self.edge_total
        return clone

    def __eq__(self, other) -> bool:
        if not isinstance(other, DegreeState):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.edge_total == other.edge_total
            and np.array_equal(self.in_deg, other.in_deg)
            and np.array_equal(self.out_deg, other.out_deg)
            and np.array_equal(self.in_endpoints, other.in_endpoints)
            and np.array_equal(self.out_endpoints, other.out_endpoints)
        )

    # Mutation

    def _check_id(self, node_id: int, limit: Optional[int] = None):
        limit = self.node_count if limit is None else limit
        if not 1 <= node_id <= limit:
            raise NodeIdError(f"node id {node_id} outside 1..{limit}")

    def _reserve_nodes(self, count: int):
        needed = count + 1
        if needed <= self._in_deg.shape[0]:
            return
        size = self._in_deg.shape[0]
        while size < needed:
            size *= 2
        self._in_deg = np.concatenate([self._in_deg, np.zeros(size - self._in_deg.shape[0], dtype=np.int64)])
        self._out_deg = np.concatenate([self._out_deg, np.zeros(size - self._out_deg.shape[0], dtype=np.int64)])

    def _reserve_edges(self, count: int):
        if count <= self._in_ep.shape[0]:
            return
        size = self._in_ep.shape[0]
        while size < count:
            size *= 2
        self._in_ep = np.concatenate([self._in_ep, np.zeros(size - self._in_ep.shape[0], dtype=np.int64)])
        self._out_ep = np.concatenate([self._out_ep, np.zeros(size - self._out_ep.shape[0], dtype=np.int64)])

    def add_edge(self, src: int, dst: int) -> 'DegreeState':
        self._check_id(src)
        self._check_id(dst)
        self._reserve_edges(self.edge_total + 1)
        self._in_deg[dst] += 1
        self._out_deg[src] += 1
        self._in_ep[self.edge_total] = dst
        self._out_ep[self.edge_total] = src
        self.edge_total += 1
        return self

    def add_node_with_edge(self, dst: int) -> int:
        """Create node node_count+1 with a single edge to dst; returns the new id."""
        self._check_id(dst)
        self._reserve_nodes(self.node_count + 1)
        self.node_count += 1
        self.add_edge(self.node_count, dst)
        return self.node_count

    def add_batch(self, sources: np.ndarray, targets: np.ndarray, new_nodes: int) -> 'DegreeState':
        """
        Apply a batch of edges in one pass.
        Targets must exist before the batch; sources may include the
        new_nodes ids created by this batch.
        """
        sources = np.asarray(sources, dtype=np.int64)
        targets = np.asarray(targets, dtype=np.int64)
        if sources.shape != targets.shape:
            raise InvalidParameterError("sources and targets must have the same length")
        if targets.size == 0:
            return self
        old_nodes = self.node_count
        total_nodes = old_nodes + int(new_nodes)
        if targets.min() < 1 or targets.max() > old_nodes:
            raise NodeIdError(f"batch target outside 1..{old_nodes}")
        if sources.min() < 1 or sources.max() > total_nodes:
            raise NodeIdError(f"batch source outside 1..{total_nodes}")
        self._reserve_nodes(total_nodes)
        start = self.edge_total
        end = start + targets.size
        self._reserve_edges(end)
        np.add.at(self._in_deg, targets, 1)
        np.add.at(self._out_deg, sources, 1)
        self._in_ep[start:end] = targets
        self._out_ep[start:end] = sources
        self.node_count = total_nodes
        self.edge_total = end
        return self

    def check_invariants(self):
        """Raise if conservation or endpoint multiplicities are broken."""
        n, e = self.node_count, self.edge_total
        if int(self.in_deg.sum()) != e or int(self.out_deg.sum()) != e:
            raise PANetError(f"degree sums ({self.in_deg.sum()}, {self.out_deg.sum()}) != edge_total {e}")
        if self.in_endpoints.shape[0] != e or self.out_endpoints.shape[0] != e:
            raise PANetError("endpoint array length differs from edge_total")
        if np.any(self.out_degrees < 1):
            raise PANetError("node with zero out-degree")
        if not np.array_equal(np.bincount(self.in_endpoints, minlength=n + 1), self.in_deg):
            raise PANetError("in-endpoint multiplicities disagree with in-degrees")
        if not np.array_equal(np.bincount(self.out_endpoints, minlength=n + 1), self.out_deg):
            raise PANetError("out-endpoint multiplicities disagree with out-degrees")


def record_edge(state: DegreeState, src: int, dst: int) -> DegreeState:
    """Add edge src -> dst between existing nodes."""
    return state.add_edge(src, dst)


def spawn_node_with_edge(state: DegreeState, dst: int) -> DegreeState:
    """Create a new node born with out-degree 1 pointing to dst."""
    state.add_node_with_edge(dst)
    return state
