"""
Exact finite-n law of the traditional model by forward dynamic programming.
States are labeled degree sequences ((I_1, O_1), ..., (I_N, O_N)) with
labels in creation order.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from pa_net.config.pa_settings import RUNTIME
from pa_net.errors import EnumerationLimitError, InvalidParameterError
from pa_net.engines.traditional_engine import TraditionalEngine
from pa_net.graph.degree_state import DegreeState, ModelParams, RngStream
from pa_net.debug.tools.run_debug_logger import debug_logger

Configuration = Tuple[Tuple[int, int], ...]

INITIAL: Configuration = ((1, 1),)


@dataclass
class ExactDistribution:
    n_steps: int
    probabilities: Dict[Configuration, float]

    def total(self) -> float:
        return float(sum(self.probabilities.values()))

    def __getitem__(self, config: Configuration) -> float:
        return self.probabilities.get(tuple(config), 0.0)

    def __len__(self) -> int:
        return len(self.probabilities)

    def node_marginal(self, node: int) -> Dict[Tuple[int, int], float]:
        """Law of (I_v, O_v) for one node id (1-based); (0, 0) when not yet born."""
        law: Dict[Tuple[int, int], float] = defaultdict(float)
        for config, prob in self.probabilities.items():
            pair = config[node - 1] if node <= len(config) else (0, 0)
            law[pair] += prob
        return dict(law)


def _advance(config: Configuration, params: ModelParams) -> Dict[Configuration, float]:
    n_nodes = len(config)
    edges = sum(i for i, _ in config)
    denom_in = edges + params.delta_in * n_nodes
    denom_out = edges + params.delta_out * n_nodes
    moves: Dict[Configuration, float] = defaultdict(float)
    for v in range(n_nodes):
        p_target = (config[v][0] + params.delta_in) / denom_in
        grown = list(config)
        grown[v] = (grown[v][0] + 1, grown[v][1])

        spawned = tuple(grown) + ((0, 1),)
        moves[spawned] += p_target * params.p

        for w in range(n_nodes):
            p_source = (config[w][1] + params.delta_out) / denom_out
            linked = list(grown)
            linked[w] = (linked[w][0], linked[w][1] + 1)
            moves[tuple(linked)] += p_target * (1.0 - params.p) * p_source
    return moves


def enumerate_traditional(params: ModelParams, n_steps: int,
                          max_steps: Optional[int] = None) -> ExactDistribution:
    """Exact law of the labeled degree sequence after n_steps edges."""
    cap = RUNTIME.enum_max_steps if max_steps is None else max_steps
    if n_steps < 0:
        raise InvalidParameterError(f"n_steps must be non-negative, got {n_steps}")
    if n_steps > cap:
        raise EnumerationLimitError(f"exact enumeration capped at {cap} steps, asked for {n_steps}")

    dist: Dict[Configuration, float] = {INITIAL: 1.0}
    for _ in range(n_steps):
        nxt: Dict[Configuration, float] = defaultdict(float)
        for config, prob in dist.items():
            for child, move in _advance(config, params).items():
                nxt[child] += prob * move
        dist = dict(nxt)
    debug_logger.log('oracle', "enumeration: %d steps, %d configurations", n_steps, len(dist))
    return ExactDistribution(n_steps=n_steps, probabilities=dist)


def configuration_of(state: DegreeState) -> Configuration:
    return tuple((int(i), int(o)) for i, o in zip(state.in_degrees, state.out_degrees))


def sample_configurations(params: ModelParams, n_steps: int, runs: int, seed: int) -> Counter:
    """Empirical configuration counts from independent simulator runs sharing one stream."""
    engine = TraditionalEngine(params)
    rng = RngStream(seed)
    counts: Counter = Counter()
    for _ in range(runs):
        state = DegreeState(capacity=n_steps + 2)
        for _ in range(n_steps):
            engine.step(state, rng)
        counts[configuration_of(state)] += 1
    return counts
