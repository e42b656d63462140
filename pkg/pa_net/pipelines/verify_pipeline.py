"""
Verify Pipeline
Runs one oracle check and returns a JSON-able report.
"""

from typing import Dict, Sequence

import numpy as np

from pa_net.errors import InvalidParameterError
from pa_net.engines.poisson_engine import simulate_poisson
from pa_net.engines.traditional_engine import simulate_traditional
from pa_net.graph.degree_state import ModelParams, replication_seeds
from pa_net.oracles.bi_embedding import simulate_bi_embedding
from pa_net.oracles.discrepancy import node_discrepancy
from pa_net.oracles.enumeration import enumerate_traditional, sample_configurations
from pa_net.oracles.growth import growth_product
from pa_net.oracles.reports import chisquare_report, exponential_gap_report, ks_report

ORACLES = ('enumerate', 'embedding', 'growth', 'discrepancy')


class VerifyPipeline:

    def __init__(self, params: ModelParams, seed: int):
        self.params = params
        self.seed = seed

    def process(self, oracle: str, steps: int, reps: int, **options) -> Dict:
        handlers = {
            'enumerate': self.enumerate,
            'embedding': self.embedding,
            'growth': self.growth,
            'discrepancy': self.discrepancy,
        }
        if oracle not in handlers:
            raise InvalidParameterError(f"unknown oracle '{oracle}', expected one of {ORACLES}")
        print(f"\n[VERIFY] {oracle}: {steps} steps, {reps} replication(s)...")
        report = handlers[oracle](steps, reps, **options)
        report['oracle'] = oracle
        report['params'] = self.params.to_dict()
        return report

    def enumerate(self, steps: int, reps: int, **_) -> Dict:
        exact = enumerate_traditional(self.params, steps)
        counts = sample_configurations(self.params, steps, reps, self.seed)
        report = chisquare_report(exact, counts)
        report['node_1_marginal'] = {f"{i},{o}": prob for (i, o), prob in sorted(exact.node_marginal(1).items())}
        return report

    def embedding(self, steps: int, reps: int, **_) -> Dict:
        seeds = replication_seeds(self.seed, 2 * reps)
        chain_in = np.zeros(reps, dtype=np.int64)
        embed_in = np.zeros(reps, dtype=np.int64)
        gaps, rates = [], []
        for r in range(reps):
            state, _ = simulate_traditional(self.params, steps, seeds[2 * r])
            chain_in[r] = state.node_degree(1)[0]
            embedded = simulate_bi_embedding(self.params, steps, seeds[2 * r + 1])
            embed_in[r] = embedded.in_deg[0]
            gaps.append(embedded.in_gaps)
            rates.append(embedded.in_rates)
        return {
            'node_1_in_degree': ks_report(chain_in, embed_in),
            'in_jump_gaps': exponential_gap_report(np.concatenate(gaps), np.concatenate(rates)),
        }

    def growth(self, steps: int, reps: int, **_) -> Dict:
        seeds = replication_seeds(self.seed, reps)
        runs = []
        for s in seeds:
            _, trace = simulate_poisson(self.params, steps, s)
            runs.append(growth_product(trace, self.params))
        in_slopes = np.array([g.in_slope for g in runs])
        out_slopes = np.array([g.out_slope for g in runs])
        return {
            'in_target': runs[0].in_target,
            'out_target': runs[0].out_target,
            'in_slope_mean': float(in_slopes.mean()),
            'out_slope_mean': float(out_slopes.mean()),
            'in_slopes': in_slopes,
            'out_slopes': out_slopes,
        }

    def discrepancy(self, steps: int, reps: int, nodes: Sequence[int] = (1, 5, 10, 50),
                    bootstrap: int = 1000, **_) -> Dict:
        return node_discrepancy(self.params, steps, reps, nodes=nodes, seed=self.seed,
                                bootstrap=bootstrap).to_dict()
