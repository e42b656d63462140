"""
Birth-immigration embedding of the traditional model.

Each node owns an in-process and an out-process: linear birth-immigration
chains started at population 0 that jump from k at rate k + immigration.
In-side: Node 1 immigrates at 1 + delta_in, later nodes at delta_in; the
in-degree is the population (plus 1 for Node 1). Out-side: every process
immigrates at 1 + delta_out and the out-degree is 1 + population. The
Bernoulli sequence B decides when processes start and, on the out-side,
whether a step jumps at all. Jumps are simulated with competing
exponential clocks (first-reaction method).
"""

from dataclasses import dataclass

import numpy as np

from pa_net.errors import InvalidParameterError
from pa_net.graph.degree_state import ModelParams, RngStream
from pa_net.debug.tools.run_debug_logger import debug_logger


@dataclass
class EmbeddingState:
    in_deg: np.ndarray          # I_v for v = 1..N
    out_deg: np.ndarray         # O_v
    birth_index: np.ndarray     # S_v
    bernoulli: np.ndarray       # B_1..B_n
    gamma: np.ndarray           # in-jump times Gamma_1..Gamma_n
    gamma_tilde: np.ndarray     # consolidated out times, flat when B_k = 1
    in_gaps: np.ndarray
    in_rates: np.ndarray        # total in-rate in force before each in-jump
    out_gaps: np.ndarray        # NaN when B_k = 1
    out_rates: np.ndarray

    @property
    def node_count(self) -> int:
        return int(self.in_deg.size)


def _first_reaction(gen: np.random.Generator, weights: np.ndarray):
    clocks = gen.exponential(1.0, size=weights.size) / weights
    j = int(np.argmin(clocks))
    return j, float(clocks[j])


def simulate_bi_embedding(params: ModelParams, n_steps: int, seed: int) -> EmbeddingState:
    """Degrees after n_steps steps of the embedded traditional model."""
    if n_steps < 0:
        raise InvalidParameterError(f"n_steps must be non-negative, got {n_steps}")
    gen = RngStream(seed).gen
    bern = gen.random(n_steps) < params.p
    size = 1 + int(bern.sum())

    birth = np.zeros(size, dtype=np.int64)
    birth[1:] = np.flatnonzero(bern) + 1

    # In-side: jump among V(k-1), then start a process if B_k = 1.
    pop_in = np.zeros(size)
    immig_in = np.full(size, params.delta_in)
    immig_in[0] = 1.0 + params.delta_in
    gamma = np.zeros(n_steps)
    in_gaps = np.zeros(n_steps)
    in_rates = np.zeros(n_steps)
    running = 1
    clock = 0.0
    for k in range(n_steps):
        weights = pop_in[:running] + immig_in[:running]
        j, gap = _first_reaction(gen, weights)
        pop_in[j] += 1.0
        clock += gap
        gamma[k] = clock
        in_gaps[k] = gap
        in_rates[k] = weights.sum()
        if bern[k]:
            running += 1

    # Out-side: a new process replaces the jump whenever B_k = 1.
    pop_out = np.zeros(size)
    immig_out = 1.0 + params.delta_out
    gamma_tilde = np.zeros(n_steps)
    out_gaps = np.full(n_steps, np.nan)
    out_rates = np.full(n_steps, np.nan)
    running = 1
    clock = 0.0
    for k in range(n_steps):
        if bern[k]:
            running += 1
        else:
            weights = pop_out[:running] + immig_out
            j, gap = _first_reaction(gen, weights)
            pop_out[j] += 1.0
            clock += gap
            out_gaps[k] = gap
            out_rates[k] = weights.sum()
        gamma_tilde[k] = clock

    in_deg = pop_in.astype(np.int64)
    in_deg[0] += 1
    out_deg = 1 + pop_out.astype(np.int64)
    debug_logger.log('oracle', "embedding: %d steps, %d processes, Gamma_n=%.4f",
                     n_steps, size, clock)
    return EmbeddingState(
        in_deg=in_deg, out_deg=out_deg, birth_index=birth, bernoulli=bern.astype(np.int64),
        gamma=gamma, gamma_tilde=gamma_tilde, in_gaps=in_gaps, in_rates=in_rates,
        out_gaps=out_gaps, out_rates=out_rates,
    )
