"""Goodness-of-fit report builders shared by the verify command and the tests."""

from collections import Counter
from typing import Dict

import numpy as np
from scipy import stats

from pa_net.errors import DegenerateSampleError
from pa_net.oracles.enumeration import ExactDistribution


def chisquare_report(exact: ExactDistribution, counts: Counter, min_expected: float = 5.0) -> Dict:
    """
    Pearson chi-square of simulated configuration counts against the exact law.
    Cells with expected count below min_expected are pooled into one.
    """
    runs = int(sum(counts.values()))
    if runs == 0:
        raise DegenerateSampleError("no simulated runs")
    unknown = [c for c in counts if c not in exact.probabilities]
    if unknown:
        raise DegenerateSampleError(f"simulator produced {len(unknown)} configuration(s) outside the exact support")

    configs = sorted(exact.probabilities)
    expected = np.array([exact.probabilities[c] for c in configs]) * runs
    observed = np.array([counts.get(c, 0) for c in configs], dtype=float)
    small = expected < min_expected
    if small.any():
        expected = np.append(expected[~small], expected[small].sum())
        observed = np.append(observed[~small], observed[small].sum())
        if expected[-1] == 0.0:
            expected, observed = expected[:-1], observed[:-1]
    expected *= observed.sum() / expected.sum()
    stat, p_value = stats.chisquare(observed, expected)
    return {
        'runs': runs,
        'configurations': len(configs),
        'cells': int(expected.size),
        'exact_total': exact.total(),
        'statistic': float(stat),
        'p_value': float(p_value),
    }


def ks_report(a, b) -> Dict:
    """Two-sample KS statistic and p-value."""
    a = np.asarray(a).ravel()
    b = np.asarray(b).ravel()
    if a.size == 0 or b.size == 0:
        raise DegenerateSampleError("two-sample KS needs non-empty samples")
    result = stats.ks_2samp(a, b)
    return {
        'n_a': int(a.size),
        'n_b': int(b.size),
        'mean_a': float(a.mean()),
        'mean_b': float(b.mean()),
        'statistic': float(result.statistic),
        'p_value': float(result.pvalue),
    }


def exponential_gap_report(gaps, rates) -> Dict:
    """Gaps scaled by the rate in force should be Exp(1): mean 1, SE 1/sqrt(n)."""
    gaps = np.asarray(gaps, dtype=float)
    rates = np.asarray(rates, dtype=float)
    keep = np.isfinite(gaps) & np.isfinite(rates)
    scaled = gaps[keep] * rates[keep]
    if scaled.size == 0:
        raise DegenerateSampleError("no jump gaps recorded")
    se = 1.0 / np.sqrt(scaled.size)
    return {
        'count': int(scaled.size),
        'mean_scaled_gap': float(scaled.mean()),
        'standard_error': float(se),
        'z': float((scaled.mean() - 1.0) / se),
    }
