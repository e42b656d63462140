"""
Angular Samples
Peaks-over-threshold extraction of in/out dependence angles and a
boundary-reflected Gaussian KDE on [0, 1].
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import stats

from pa_net.errors import DegenerateSampleError, InvalidParameterError
from pa_net.debug.tools.run_debug_logger import debug_logger


@dataclass
class AngularSample:
    theta: np.ndarray
    threshold: float
    a: float
    quantile: float
    n_input: int

    def __len__(self) -> int:
        return int(self.theta.size)


def nearest_rank(values: np.ndarray, quantile: float) -> float:
    """ceil(q n)-th smallest value (1-based rank)."""
    ordered = np.sort(np.asarray(values, dtype=float))
    rank = max(1, math.ceil(quantile * ordered.size - 1e-9))
    return float(ordered[rank - 1])


def angular_samples(degree_pairs, a: float, quantile: float = 0.995) -> AngularSample:
    """theta = I^a / (I^a + O) for the pairs whose R = I^a + O exceeds the quantile threshold."""
    if not a > 0:
        raise InvalidParameterError(f"a must be positive, got {a}")
    if not 0.0 < quantile < 1.0:
        raise InvalidParameterError(f"quantile must lie in (0, 1), got {quantile}")
    pairs = np.asarray(degree_pairs, dtype=float).reshape(-1, 2)
    pairs = pairs[(pairs[:, 0] > 0) | (pairs[:, 1] > 0)]
    if pairs.shape[0] == 0:
        raise DegenerateSampleError("no degree pairs with I + O > 0")
    ins, outs = pairs[:, 0], pairs[:, 1]
    scaled = np.where(ins > 0, ins ** a, 0.0)
    radius = scaled + outs
    theta = scaled / radius
    r = nearest_rank(radius, quantile)
    keep = radius > r
    debug_logger.log('fit', "POT: %d of %d pairs above r=%.6g (a=%.4f)",
                     int(keep.sum()), radius.size, r, a)
    return AngularSample(theta=theta[keep], threshold=r, a=float(a),
                         quantile=float(quantile), n_input=int(radius.size))


def silverman_bandwidth(samples: np.ndarray) -> float:
    """0.9 * min(sd, IQR / 1.34) * n^(-1/5); falls back to sd when the IQR is 0."""
    x = np.asarray(samples, dtype=float)
    sd = float(np.std(x, ddof=1))
    if sd == 0.0:
        raise DegenerateSampleError("all samples equal; automatic bandwidth undefined")
    q75, q25 = np.percentile(x, [75, 25])
    spread = min(sd, (q75 - q25) / 1.34) if q75 > q25 else sd
    return 0.9 * spread * x.size ** (-0.2)


def kde(samples, grid, bandwidth: Optional[float] = None) -> np.ndarray:
    """Gaussian KDE on [0, 1] with mirror images of the sample at both boundaries."""
    x = np.asarray(samples, dtype=float).ravel()
    g = np.asarray(grid, dtype=float).ravel()
    if bandwidth is None:
        if x.size < 2:
            raise DegenerateSampleError("automatic bandwidth needs at least two samples")
        h = silverman_bandwidth(x)
    else:
        if not bandwidth > 0:
            raise InvalidParameterError(f"bandwidth must be positive, got {bandwidth}")
        if x.size < 1:
            raise DegenerateSampleError("empty sample")
        h = float(bandwidth)
    diff = g[:, None] - x[None, :]
    dens = (stats.norm.pdf(diff / h)
            + stats.norm.pdf((g[:, None] + x[None, :]) / h)          # mirror at 0
            + stats.norm.pdf((g[:, None] - (2.0 - x[None, :])) / h))  # mirror at 1
    return dens.sum(axis=1) / (x.size * h)
