"""
Growth products along a Poisson-model path.

    prod_{k<n} (1 + (lam+1) / (M_k + 1 + delta_in |V(k)|))           ~ n^(1/(1+delta_in p))
    prod_{k<n} (1 + (lam+1)(1-p) / (M_k + 1 + delta_out |V(k)|))     ~ n^((1-p)/(1+delta_out p))

Only the exponents are checked; the random limit factors have no
finite-sample handle.
"""

from dataclasses import dataclass

import numpy as np

from pa_net.errors import InvalidParameterError, TraceTooShortError
from pa_net.engines.base_engine import SimTrace
from pa_net.graph.degree_state import ModelParams

MIN_STEPS = 100


@dataclass
class GrowthDiagnostic:
    log_in_product: np.ndarray       # index n holds log prod_{k<n}
    log_out_product: np.ndarray
    in_slope: float
    out_slope: float
    in_target: float
    out_target: float
    in_log_ratio_range: float
    out_log_ratio_range: float

    def to_dict(self) -> dict:
        return {
            'steps': int(self.log_in_product.size - 1),
            'in_slope': self.in_slope,
            'out_slope': self.out_slope,
            'in_target': self.in_target,
            'out_target': self.out_target,
            'in_log_ratio_range': self.in_log_ratio_range,
            'out_log_ratio_range': self.out_log_ratio_range,
        }


def _fit(log_product: np.ndarray, target: float):
    n = log_product.size - 1
    idx = np.arange(max(n // 2, 1), n + 1)
    log_n = np.log(idx)
    slope = float(np.polyfit(log_n, log_product[idx], 1)[0])
    ratio = log_product[idx] - target * log_n
    return slope, float(ratio.max() - ratio.min())


def growth_product(trace: SimTrace, params: ModelParams) -> GrowthDiagnostic:
    if params.lam is None:
        raise InvalidParameterError("growth products need the Poisson rate lambda")
    if trace.steps < MIN_STEPS:
        raise TraceTooShortError(f"need at least {MIN_STEPS} steps for a slope fit, got {trace.steps}")
    m = trace.m[:-1].astype(float)
    v = trace.v[:-1].astype(float)
    lam1 = params.lam + 1.0
    in_terms = np.log1p(lam1 / (m + 1.0 + params.delta_in * v))
    out_terms = np.log1p(lam1 * (1.0 - params.p) / (m + 1.0 + params.delta_out * v))
    log_in = np.concatenate(([0.0], np.cumsum(in_terms)))
    log_out = np.concatenate(([0.0], np.cumsum(out_terms)))

    in_target = 1.0 / (1.0 + params.delta_in * params.p)
    out_target = (1.0 - params.p) / (1.0 + params.delta_out * params.p)
    in_slope, in_range = _fit(log_in, in_target)
    out_slope, out_range = _fit(log_out, out_target)
    return GrowthDiagnostic(
        log_in_product=log_in, log_out_product=log_out,
        in_slope=in_slope, out_slope=out_slope,
        in_target=in_target, out_target=out_target,
        in_log_ratio_range=in_range, out_log_ratio_range=out_range,
    )
