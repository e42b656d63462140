"""
Dataset Pipeline
Orchestrates edge list → window → rates → degrees → estimates → angular
samples for one observed network.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from pa_net.errors import DegenerateSampleError, InvalidParameterError
from pa_net.estimators.angular_samples import AngularSample, angular_samples, kde
from pa_net.estimators.model_fit import DatasetSummary, ParamEstimates, fit_pipeline
from pa_net.ingest.degrees import DegreeTable, admin_mask, degrees_from_log
from pa_net.ingest.edge_log import TemporalEdgeLog, drop_nodes, filter_window, parse_edge_list
from pa_net.ingest.rates import RateSeries, daily_rates
from pa_net.theory.angular import default_theta_grid
from pa_net.utils.time_utils import parse_hour_range, window_bounds, window_days
from pa_net.debug.tools.run_debug_logger import debug_logger


HourSpec = Union[None, str, Sequence[int]]


def resolve_hours(spec: HourSpec) -> Tuple[int, ...]:
    """'H1-H2' or a (H1, H2) pair -> excluded hours H1..H2-1."""
    if spec is None:
        return ()
    if isinstance(spec, str):
        return parse_hour_range(spec)
    lo, hi = (int(h) for h in spec)
    return parse_hour_range(f"{lo}-{hi}")


@dataclass
class FitResult:
    """Everything the fit command writes out."""
    label: str
    log: TemporalEdgeLog
    rates: RateSeries
    degrees: DegreeTable
    summary: DatasetSummary
    estimates: ParamEstimates
    sample: Optional[AngularSample]
    kde_grid: np.ndarray
    kde_values: Optional[np.ndarray]
    admin_dropped: int = 0
    notes: List[str] = field(default_factory=list)

    def degrees_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'label': self.degrees.labels,
                             'in': self.degrees.in_deg,
                             'out': self.degrees.out_deg})

    def samples_frame(self) -> pd.DataFrame:
        theta = self.sample.theta if self.sample is not None else np.zeros(0)
        return pd.DataFrame({'theta': theta})

    def kde_frame(self) -> pd.DataFrame:
        values = self.kde_values if self.kde_values is not None else np.full(self.kde_grid.size, np.nan)
        return pd.DataFrame({'theta': self.kde_grid, 'density': values})

    def report(self) -> Dict:
        doc = self.estimates.to_dict()
        doc.update({
            'label': self.label,
            'edges': len(self.log),
            'nodes': len(self.degrees),
            'malformed_lines': len(self.log.malformed),
            'admin_dropped': self.admin_dropped,
            'rate_method': self.rates.method,
            'defined_days': self.rates.defined_days,
            'angular_threshold': self.sample.threshold if self.sample is not None else None,
            'angular_count': len(self.sample) if self.sample is not None else 0,
        })
        doc['notes'] = list(self.estimates.notes) + self.notes
        return doc


class DatasetPipeline:
    """
    Fits the Poisson-measured model to one temporal edge list.

    Settings (usually a dataset profile merged with CLI flags):
        window         (start, end) local dates, inclusive
        exclude_hours  'H1-H2', (H1, H2) or None
        tz_offset      seconds east of UTC
        rate_method    'interarrival' or 'count'
        admin_filter   in-degree floor for administration accounts, or None
        quantile       POT threshold quantile
    """

    def __init__(self, name: str, settings: Dict, grid_points: int = 512):
        self.name = name
        self.settings = settings
        self.grid_points = grid_points
        self.debug = os.getenv('PA_PIPELINE_DEBUG', '0') == '1'

    def process(self, source: Union[str, Path]) -> FitResult:
        s = self.settings
        if not s.get('window'):
            raise InvalidParameterError("fit needs an observation window")
        start, end = s['window']
        tz = int(s.get('tz_offset') or 0)
        excluded = resolve_hours(s.get('exclude_hours'))
        method = s.get('rate_method') or 'interarrival'
        quantile = float(s.get('quantile') or 0.995)
        notes: List[str] = []

        print(f"\n[{self.name}] Reading {source}...")
        log = parse_edge_list(Path(source), tz_offset=tz)
        if log.malformed:
            print(f"[{self.name}] {len(log.malformed)} malformed line(s) skipped")
        lo, hi = window_bounds(start, end, tz)
        log = filter_window(log, lo, hi, excluded)
        print(f"[{self.name}] Window {start}..{end}: {len(log)} edges"
              + (f" (local hours {excluded[0]}-{excluded[-1] + 1} excluded)" if excluded else ""))
        if len(log) == 0:
            raise DegenerateSampleError(f"no edges inside the window {start}..{end}")

        # Phase 1: optional administration-account removal
        dropped = 0
        if s.get('admin_filter') is not None:
            table = degrees_from_log(log)
            mask = admin_mask(table.in_deg, table.out_deg, int(s['admin_filter']))
            dropped = int(mask.sum())
            log = drop_nodes(log, table.labels[mask])
            notes.append(f"admin filter: {dropped} nodes with out=0, in>={s['admin_filter']} removed")
            print(f"[{self.name}] Admin filter removed {dropped} node(s), {len(log)} edges left")

        # Phase 2: rates and degrees
        rates = daily_rates(log, excluded, method, start=lo, end=hi)
        degrees = degrees_from_log(log)
        summary = DatasetSummary(
            node_total=len(degrees),
            edge_total=len(log),
            lambda_daily=rates.lambda_daily,
            active_hours=rates.active_hours,
            days=window_days(start, end),
            in_degrees=degrees.in_deg,
            out_degrees=degrees.out_deg,
            iota_in=s.get('iota_in'),
            iota_out=s.get('iota_out'),
            label=self.name,
        )

        # Phase 3: estimates
        estimates = fit_pipeline(summary)

        # Phase 4: angular samples and KDE
        grid = default_theta_grid(self.grid_points)
        a = estimates.iota_in_hat / estimates.iota_out_hat
        sample: Optional[AngularSample] = None
        values: Optional[np.ndarray] = None
        try:
            sample = angular_samples(degrees.pairs, a, quantile)
            values = kde(sample.theta, grid)
        except DegenerateSampleError as e:
            notes.append(f"angular KDE skipped: {e}")
            print(f"[{self.name}] Angular KDE skipped: {e}")

        if self.debug:
            print(f"  ─ rates: {rates.defined_days} defined days, lambda_d={rates.lambda_daily:.4f}")
            print(f"  ─ tail: k*_in={estimates.k_star_in}, k*_out={estimates.k_star_out}")
        debug_logger.log_snapshot('pipeline', f"fit_{self.name}", estimates.to_dict())

        self._print_summary(estimates)
        return FitResult(label=self.name, log=log, rates=rates, degrees=degrees, summary=summary,
                         estimates=estimates, sample=sample, kde_grid=grid, kde_values=values,
                         admin_dropped=dropped, notes=notes)

    def _print_summary(self, est: ParamEstimates):
        print(f"\n[{self.name}] Complete: "
              f"lambda_h={est.lambda_hourly:.4f}, p={est.p_hat:.4f}, "
              f"delta_in={est.delta_in_hat:.4f}, delta_out={est.delta_out_hat:.4f}, n={est.n_steps}")
