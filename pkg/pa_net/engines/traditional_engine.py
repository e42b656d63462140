"""
Traditional directed PA: one edge per step, weights updated after every edge.
"""

from typing import Iterable, Optional, Tuple

from pa_net.engines.base_engine import BaseEngine, SimTrace
from pa_net.graph.degree_state import DegreeState, ModelParams, RngStream
from pa_net.graph.sampling import sample_in_target, sample_out_source


class TraditionalEngine(BaseEngine):

    name = 'traditional'

    def step(self, state: DegreeState, rng: RngStream) -> DegreeState:
        # Both choices are made against the pre-step state.
        params = self.params
        target = sample_in_target(state, params.delta_in, rng)
        if rng.uniform() < params.p:
            state.add_node_with_edge(target)
        else:
            source = sample_out_source(state, params.delta_out, rng)
            state.add_edge(source, target)
        return state


def step_traditional(state: DegreeState, params: ModelParams, rng: RngStream) -> DegreeState:
    """Add one edge; lam is ignored."""
    return TraditionalEngine(params).step(state, rng)


def simulate_traditional(params: ModelParams, n_steps: int, seed: int,
                         checkpoints: Optional[Iterable[int]] = None) -> Tuple[DegreeState, SimTrace]:
    return TraditionalEngine(params).simulate(n_steps, seed, checkpoints)
