"""
Model Fit
Moment-style estimation of (lambda, p, delta_in, delta_out) from a dataset
summary: p from node/edge totals, offsets by inverting Hill tail indices,
lambda rescaled from daily to hourly steps.
"""

from dataclasses import dataclass, field, asdict
from typing import Dict, List, Optional

import numpy as np

from pa_net.errors import InfeasibleInversionError, InvalidParameterError
from pa_net.estimators.tail_index import min_distance_k
from pa_net.graph.degree_state import ModelParams
from pa_net.theory.limit_laws import delta_from_tail
from pa_net.debug.tools.run_debug_logger import debug_logger


def estimate_p(node_total: int, edge_total: int) -> float:
    """Share of edges that introduced a new node."""
    if edge_total <= 0:
        raise InvalidParameterError("edge total must be positive")
    if node_total <= 0:
        raise InvalidParameterError("node total must be positive")
    if node_total > edge_total:
        raise InvalidParameterError(f"node total {node_total} exceeds edge total {edge_total}")
    return node_total / edge_total


def rescale_lambda(lambda_daily: float, active_hours: int) -> float:
    """Daily rate to rate per active hour."""
    if not 1 <= active_hours <= 24:
        raise InvalidParameterError(f"active hours must lie in 1..24, got {active_hours}")
    return lambda_daily / active_hours


@dataclass
class DatasetSummary:
    node_total: int
    edge_total: int
    lambda_daily: float
    active_hours: int
    days: int
    in_degrees: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    out_degrees: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    iota_in: Optional[float] = None     # fixed tail index instead of the k-scan
    iota_out: Optional[float] = None
    label: str = 'dataset'


@dataclass
class ParamEstimates:
    lambda_daily: float
    lambda_hourly: float
    p_hat: float
    delta_in_hat: float
    delta_out_hat: float
    iota_in_hat: float
    iota_out_hat: float
    n_steps: int
    k_star_in: Optional[int] = None
    k_star_out: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    def model_params(self) -> ModelParams:
        return ModelParams(p=self.p_hat, delta_in=self.delta_in_hat,
                           delta_out=self.delta_out_hat, lam=self.lambda_hourly)

    def to_dict(self) -> Dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict) -> 'ParamEstimates':
        known = {k: data[k] for k in cls.__dataclass_fields__ if k in data}
        return cls(**known)


def _tail_index(degrees: np.ndarray, fixed: Optional[float], side: str, notes: List[str]):
    if fixed is not None:
        notes.append(f"iota_{side}: supplied ({fixed})")
        return float(fixed), None
    fit = min_distance_k(degrees)
    notes.append(f"iota_{side}: min-distance Hill, k*={fit.k_star}, D={fit.distance:.6g}")
    return fit.iota_hat, fit.k_star


def fit_pipeline(summary: DatasetSummary) -> ParamEstimates:
    """End-to-end parameter estimates for the Poisson-measured model."""
    notes: List[str] = [f"source: {summary.label}"]
    p_hat = estimate_p(summary.node_total, summary.edge_total)
    notes.append(f"p: {summary.node_total} nodes / {summary.edge_total} edges")

    iota_in, k_in = _tail_index(summary.in_degrees, summary.iota_in, 'in', notes)
    iota_out, k_out = _tail_index(summary.out_degrees, summary.iota_out, 'out', notes)

    try:
        delta_in, delta_out = delta_from_tail(iota_in, iota_out, p_hat)
    except InfeasibleInversionError as e:
        raise InfeasibleInversionError(
            f"{summary.label}: cannot invert iota_in={iota_in:.4f}, iota_out={iota_out:.4f} "
            f"at p={p_hat:.4f}: {e}", iota_in, iota_out, p_hat) from e

    lambda_hourly = rescale_lambda(summary.lambda_daily, summary.active_hours)
    notes.append(f"lambda: daily {summary.lambda_daily} / {summary.active_hours} active hours")
    if summary.days < 1:
        raise InvalidParameterError("summary must cover at least one day")
    n_steps = int(summary.days) * int(summary.active_hours)

    estimates = ParamEstimates(
        lambda_daily=float(summary.lambda_daily),
        lambda_hourly=float(lambda_hourly),
        p_hat=float(p_hat),
        delta_in_hat=float(delta_in),
        delta_out_hat=float(delta_out),
        iota_in_hat=float(iota_in),
        iota_out_hat=float(iota_out),
        n_steps=n_steps,
        k_star_in=k_in,
        k_star_out=k_out,
        notes=notes,
    )
    debug_logger.log('fit', "%s: lambda_h=%.4f p=%.4f delta=(%.4f, %.4f) n=%d", summary.label,
                     lambda_hourly, p_hat, delta_in, delta_out, n_steps)
    return estimates
