"""
Tail Index
Hill estimator, KS distance of the upper tail to a pure power law, and the
minimum-distance choice of k.

All three share one pre-sorted view of the sample (_TailScan) so the
distance reported by the k-scan is exactly ks_distance at the chosen k.
"""

from typing import NamedTuple, Optional

import numpy as np

from pa_net.errors import DegenerateSampleError, InvalidParameterError, UndefinedEstimateError
from pa_net.debug.tools.run_debug_logger import debug_logger


class TailFit(NamedTuple):
    k_star: int
    iota_hat: float
    distance: float


class _TailScan:
    """Positive values sorted decreasingly, with cumulative logs and distinct-value counts."""

    def __init__(self, degrees):
        x = np.asarray(degrees, dtype=float).ravel()
        if x.size and np.any(x < 0):
            raise InvalidParameterError("degrees must be non-negative")
        x = x[x > 0]
        # Stable sort on the negated values keeps tie order deterministic.
        self.x = x[np.argsort(-x, kind='stable')]
        self.n = self.x.size
        logs = np.log(self.x)
        self.log_x = logs
        self.cum_log = np.cumsum(logs)
        vals, first = np.unique(-self.x, return_index=True)
        self.values = -vals                               # distinct, decreasing
        counts = np.diff(np.append(first, self.n))
        self.cum_counts = np.cumsum(counts)               # #entries >= values[i]
        self.rank_of = np.searchsorted(vals, -self.x)     # distinct index of each sorted entry

    def check_k(self, k: int):
        if not 1 <= k < self.n:
            raise InvalidParameterError(f"k must satisfy 1 <= k < {self.n}, got {k}")

    def log_sum(self, k: int) -> float:
        return float(self.cum_log[k - 1] - k * self.log_x[k])

    def hill(self, k: int) -> float:
        self.check_k(k)
        s = self.log_sum(k)
        if s <= 0.0:
            raise UndefinedEstimateError(f"top {k + 1} order statistics are all equal")
        return k / s

    def distance(self, k: int, iota: float) -> float:
        self.check_k(k)
        base = self.x[k]
        i0 = int(self.rank_of[k])
        cc = self.cum_counts[:i0 + 1]
        prev = np.concatenate(([0], cc[:-1]))
        ratio = self.values[:i0 + 1] / base
        model = ratio ** (-iota)
        right = prev / k                    # #{ratio > y} / k at y = ratio
        left = np.minimum(cc, k) / k        # #{ratio >= y} / k
        return float(max(np.max(np.abs(right - model)), np.max(np.abs(left - model))))


def hill(degrees, k: int) -> float:
    """Reciprocal mean log-excess of the k largest values over the (k+1)-th."""
    return _TailScan(degrees).hill(k)


def hill_path(degrees) -> np.ndarray:
    """Hill estimates for k = 1..n-1 (NaN where undefined)."""
    scan = _TailScan(degrees)
    ks = np.arange(1, scan.n)
    sums = scan.cum_log[ks - 1] - ks * scan.log_x[ks]
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(sums > 0, ks / sums, np.nan)


def ks_distance(degrees, k: int, iota_hat: float) -> float:
    """sup_{y>=1} |empirical tail of the top-k ratios - y^-iota_hat|."""
    scan = _TailScan(degrees)
    scan.hill(k)
    return scan.distance(k, iota_hat)


def scan_range(degrees) -> range:
    """Values of k visited by min_distance_k."""
    n = _TailScan(degrees).n
    return range(1, max(n - 1, 1))


def min_distance_k(degrees, k_max: Optional[int] = None) -> TailFit:
    """
    Choose k by minimizing the KS distance; ties go to the smaller k.
    k runs over 1 <= k < n_positive - 1, so the fitted tail always keeps
    at least two observations below the threshold order statistic.
    """
    scan = _TailScan(degrees)
    if scan.values.size < 3:
        raise DegenerateSampleError("need at least three distinct positive values")
    upper = scan.n - 1 if k_max is None else min(scan.n - 1, k_max + 1)
    best: Optional[TailFit] = None
    for k in range(1, upper):
        s = scan.log_sum(k)
        if s <= 0.0:
            continue
        iota = k / s
        dist = scan.distance(k, iota)
        if best is None or dist < best.distance:
            best = TailFit(k, iota, dist)
    if best is None:
        raise UndefinedEstimateError("no k with a defined Hill estimate")
    debug_logger.log('fit', "min-distance k*=%d iota=%.4f D=%.4f (n=%d)",
                     best.k_star, best.iota_hat, best.distance, scan.n)
    return best


def ccdf(degrees):
    """Distinct values d (increasing) and P(D >= d)."""
    x = np.asarray(degrees).ravel()
    if x.size == 0:
        raise DegenerateSampleError("empty sample")
    vals, counts = np.unique(x, return_counts=True)
    tail = np.cumsum(counts[::-1])[::-1]
    return vals, tail / x.size


def ccdf_at(degrees, points) -> np.ndarray:
    """P(D >= d) of one sample at arbitrary points."""
    x = np.sort(np.asarray(degrees).ravel())
    if x.size == 0:
        raise DegenerateSampleError("empty sample")
    below = np.searchsorted(x, np.asarray(points), side='left')
    return 1.0 - below / x.size


def ccdf_envelope(samples, points=None):
    """
    Pointwise min, median and max of the replication CCDFs.

    Returns (points, lower, median, upper). Each curve is non-increasing,
    so the pointwise envelopes are as well.
    """
    samples = [np.asarray(s).ravel() for s in samples]
    if not samples:
        raise DegenerateSampleError("no replications")
    if points is None:
        points = np.unique(np.concatenate(samples))
    points = np.asarray(points)
    curves = np.vstack([ccdf_at(s, points) for s in samples])
    return points, curves.min(axis=0), np.median(curves, axis=0), curves.max(axis=0)
