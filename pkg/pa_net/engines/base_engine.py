"""
Abstract base class for the growth engines.
Ensures every engine implements 'step' and shares the simulate driver.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from pa_net.errors import InvalidParameterError
from pa_net.graph.degree_state import DegreeState, ModelParams, RngStream
from pa_net.debug.tools.run_debug_logger import debug_logger


@dataclass
class SimTrace:
    """Edge and node counts after each step, plus optional degree checkpoints."""
    edges_added: List[int] = field(default_factory=lambda: [0])   # M_k
    node_counts: List[int] = field(default_factory=lambda: [1])   # |V(k)|
    checkpoints: Dict[int, Tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)

    def record(self, state: DegreeState):
        self.edges_added.append(state.edge_total - 1)
        self.node_counts.append(state.node_count)

    @property
    def steps(self) -> int:
        return len(self.edges_added) - 1

    @property
    def m(self) -> np.ndarray:
        return np.asarray(self.edges_added, dtype=np.int64)

    @property
    def v(self) -> np.ndarray:
        return np.asarray(self.node_counts, dtype=np.int64)


class BaseEngine(ABC):

    name = 'base'

    def __init__(self, params: ModelParams):
        self.params = params
        self.validate()

    def validate(self):
        """Hook for model-specific parameter checks."""

    @abstractmethod
    def step(self, state: DegreeState, rng: RngStream) -> DegreeState:
        """
        Advance the graph by one step.

        Args:
            state: Degree state, mutated in place
            rng: Random stream of the run

        Returns:
            The same state object, for chaining
        """
        pass

    def simulate(self, n_steps: int, seed: int,
                 checkpoints: Optional[Iterable[int]] = None) -> Tuple[DegreeState, SimTrace]:
        """Run G(0) forward n_steps steps."""
        if n_steps < 0:
            raise InvalidParameterError(f"n_steps must be non-negative, got {n_steps}")
        wanted = set(int(c) for c in (checkpoints or ()))
        rng = RngStream(seed)
        state = DegreeState()
        trace = SimTrace()
        if 0 in wanted:
            trace.checkpoints[0] = (state.in_degrees.copy(), state.out_degrees.copy())
        for k in range(1, n_steps + 1):
            self.step(state, rng)
            trace.record(state)
            if k in wanted:
                trace.checkpoints[k] = (state.in_degrees.copy(), state.out_degrees.copy())
        debug_logger.log('sim', "%s: %d steps, %d nodes, %d edges (seed %d)",
                         self.name, n_steps, state.node_count, state.edge_total - 1, seed)
        return state, trace
