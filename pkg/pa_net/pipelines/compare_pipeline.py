"""
Compare Pipeline
Simulates the fitted Poisson model and lines its degree tails and angular
density up against the limit theory and, optionally, the observed network.
"""

import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from pa_net.errors import ConfigError, DegenerateSampleError
from pa_net.estimators.angular_samples import angular_samples, kde
from pa_net.estimators.model_fit import ParamEstimates
from pa_net.estimators.tail_index import ccdf_at, ccdf_envelope
from pa_net.pipelines.replication_pipeline import ReplicationPipeline, ReplicationResult
from pa_net.theory.angular import angular_density, default_theta_grid


@dataclass
class CompareResult:
    ccdf_in: pd.DataFrame
    ccdf_out: pd.DataFrame
    angular_overlay: pd.DataFrame
    reps_used_for_kde: int
    notes: List[str] = field(default_factory=list)


def _ccdf_frame(samples: List[np.ndarray], observed: Optional[np.ndarray]) -> pd.DataFrame:
    pool = samples + ([observed] if observed is not None else [])
    points = np.unique(np.concatenate(pool))
    points, lower, median, upper = ccdf_envelope(samples, points)
    frame = pd.DataFrame({'degree': points, 'min': lower, 'median': median, 'max': upper})
    if observed is not None:
        frame['observed'] = ccdf_at(observed, points)
    return frame


class ComparePipeline:
    """Replicates the fitted model `reps` times from one seed."""

    def __init__(self, name: str, estimates: ParamEstimates, reps: int, seed: int,
                 quantile: float = 0.995, grid_points: int = 512, threads: Optional[int] = None):
        self.name = name
        self.estimates = estimates
        self.reps = reps
        self.seed = seed
        self.quantile = quantile
        self.grid_points = grid_points
        self.threads = threads
        self.debug = os.getenv('PA_PIPELINE_DEBUG', '0') == '1'

    def process(self, observed: Optional[pd.DataFrame] = None) -> CompareResult:
        params = self.estimates.model_params()
        notes: List[str] = []
        runs: List[ReplicationResult] = ReplicationPipeline(
            name=self.name, params=params, model='poisson', steps=self.estimates.n_steps,
            reps=self.reps, seed=self.seed, threads=self.threads,
        ).process()

        obs_in = observed['in'].to_numpy() if observed is not None else None
        obs_out = observed['out'].to_numpy() if observed is not None else None
        ccdf_in = _ccdf_frame([r.in_degrees for r in runs], obs_in)
        ccdf_out = _ccdf_frame([r.out_degrees for r in runs], obs_out)

        # Angular overlay: mean simulated KDE, limit density, observed KDE
        grid = default_theta_grid(self.grid_points)
        a = self.estimates.iota_in_hat / self.estimates.iota_out_hat
        curves = []
        for r in runs:
            try:
                sample = angular_samples(r.pairs, a, self.quantile)
                curves.append(kde(sample.theta, grid))
            except DegenerateSampleError as e:
                notes.append(f"rep {r.index}: {e}")
        overlay = pd.DataFrame({'theta': grid})
        overlay['simulated_mean'] = np.mean(curves, axis=0) if curves else np.nan
        overlay['theory'] = angular_density(params, grid).density
        if observed is not None:
            try:
                sample = angular_samples(observed[['in', 'out']].to_numpy(), a, self.quantile)
                overlay['observed'] = kde(sample.theta, grid)
            except DegenerateSampleError as e:
                notes.append(f"observed: {e}")
                overlay['observed'] = np.nan

        if self.debug:
            for note in notes:
                print(f"  ─ {note}")
        print(f"\n[{self.name}] Complete: {len(runs)} replications, "
              f"{len(curves)} with an angular KDE")
        return CompareResult(ccdf_in=ccdf_in, ccdf_out=ccdf_out, angular_overlay=overlay,
                             reps_used_for_kde=len(curves), notes=notes)

    @staticmethod
    def load_estimates(doc: Dict) -> ParamEstimates:
        """Accepts a fit report as written (config + result) or the bare estimates."""
        if not isinstance(doc, dict):
            raise ConfigError(f"fit report must be a JSON object, got {type(doc).__name__}")
        data = doc.get('result', doc)
        try:
            estimates = ParamEstimates.from_dict(data)
            estimates.model_params()
        except (TypeError, KeyError, ValueError, AttributeError) as e:
            raise ConfigError(f"fit report is missing or has invalid estimates: {e}") from e
        return estimates
