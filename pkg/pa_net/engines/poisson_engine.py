"""
Directed PA with Poisson measurement.
Each step adds 1 + Poisson(lam) edges, all attached with the weights frozen
at the start of the step. Nodes and degree created inside a batch carry no
weight until the next step.
"""

from typing import Iterable, Optional, Tuple

import numpy as np

from pa_net.errors import InvalidParameterError
from pa_net.engines.base_engine import BaseEngine, SimTrace
from pa_net.graph.degree_state import BatchSnapshot, DegreeState, ModelParams, RngStream
from pa_net.graph.sampling import sample_in_targets, sample_out_sources


class PoissonEngine(BaseEngine):

    name = 'poisson'

    def validate(self):
        if self.params.lam is None:
            raise InvalidParameterError("the Poisson model needs lambda")

    def batch_size(self, rng: RngStream) -> int:
        # numpy's poisson is exact (inversion for small lam, PTRS above).
        return 1 + int(rng.gen.poisson(self.params.lam))

    def step(self, state: DegreeState, rng: RngStream) -> DegreeState:
        params = self.params
        size = self.batch_size(rng)
        snapshot: BatchSnapshot = state.snapshot()

        # Edge order 1..size fixes which new node gets which id.
        spawn = rng.gen.random(size) < params.p
        targets = sample_in_targets(state, params.delta_in, size, rng, snapshot)
        new_nodes = int(spawn.sum())
        sources = np.empty(size, dtype=np.int64)
        sources[spawn] = snapshot.node_count + 1 + np.arange(new_nodes, dtype=np.int64)
        n_old = size - new_nodes
        if n_old:
            sources[~spawn] = sample_out_sources(state, params.delta_out, n_old, rng, snapshot)

        state.add_batch(sources, targets, new_nodes)
        return state


def step_poisson(state: DegreeState, params: ModelParams, rng: RngStream) -> DegreeState:
    return PoissonEngine(params).step(state, rng)


def simulate_poisson(params: ModelParams, n_steps: int, seed: int,
                     checkpoints: Optional[Iterable[int]] = None) -> Tuple[DegreeState, SimTrace]:
    return PoissonEngine(params).simulate(n_steps, seed, checkpoints)


def engine_for(params: ModelParams, model: str) -> BaseEngine:
    """Engine by model name ('traditional' or 'poisson')."""
    if model == 'traditional':
        from pa_net.engines.traditional_engine import TraditionalEngine
        return TraditionalEngine(params)
    if model == 'poisson':
        return PoissonEngine(params)
    raise InvalidParameterError(f"unknown model '{model}'")
