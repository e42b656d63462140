"""
Limit angular density of theta = I^a / (I^a + O) given a large radius
R = I^a + O, with a = iota_in / iota_out.

    f(theta) ~ (p / delta_out) theta^(delta_in/a - 1) (1 - theta)^delta_out
               * int_0^inf t^e exp(-t theta^(1/a) - t^a (1 - theta)) dt
    e = a - 1 + iota_in + delta_in + a * delta_out

The inner integral is evaluated in u = log t around its (unique) maximum and
carried in log space; the outer density is normalized numerically.
"""

from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize

from pa_net.errors import InvalidParameterError, QuadratureError
from pa_net.graph.degree_state import ModelParams
from pa_net.theory.limit_laws import tail_exponents
from pa_net.debug.tools.run_debug_logger import debug_logger

TRUNCATION = 1e-14


@dataclass
class AngularGrid:
    theta: np.ndarray
    density: np.ndarray
    log_normalization: float
    a: float

    @property
    def normalization(self) -> float:
        """Trapezoid integral of the unnormalized density (may overflow to inf)."""
        return float(np.exp(self.log_normalization))

    def mode(self) -> float:
        return float(self.theta[int(np.argmax(self.density))])


def _log_inner(theta: float, a: float, e: float) -> float:
    c1 = theta ** (1.0 / a)
    c2 = 1.0 - theta

    def h(u):
        return (e + 1.0) * u - np.exp(u) * c1 - np.exp(a * u) * c2

    def dh(u):
        return (e + 1.0) - np.exp(u) * c1 - a * np.exp(a * u) * c2

    # dh is strictly decreasing from e + 1 > 0, so the root is unique.
    lo, hi = -1.0, 1.0
    while dh(lo) < 0.0:
        lo *= 2.0
    while dh(hi) > 0.0:
        hi *= 2.0
    u_star = optimize.brentq(dh, lo, hi, xtol=1e-12)
    h_star = h(u_star)

    floor = np.log(TRUNCATION)
    step = 1.0
    left = u_star - step
    while h(left) - h_star > floor:
        step *= 1.5
        left = u_star - step
    step = 1.0
    right = u_star + step
    while h(right) - h_star > floor:
        step *= 1.5
        right = u_star + step

    value, err = integrate.quad(lambda u: np.exp(h(u) - h_star), left, right,
                                points=[u_star], epsabs=0.0, epsrel=1e-10, limit=200)
    if not np.isfinite(value) or value <= 0.0:
        raise QuadratureError(f"inner angular integral failed at theta={theta}")
    return h_star + np.log(value)


def angular_density(params: ModelParams, theta_grid) -> AngularGrid:
    """Normalized limit angular density on a grid strictly inside (0, 1)."""
    theta = np.asarray(theta_grid, dtype=float)
    if theta.ndim != 1 or theta.size == 0:
        raise InvalidParameterError("theta grid must be a non-empty 1-d sequence")
    if np.any(theta <= 0.0) or np.any(theta >= 1.0):
        raise InvalidParameterError("theta grid must lie strictly inside (0, 1)")

    tails = tail_exponents(params)
    a = tails.a
    d_in, d_out = params.delta_in, params.delta_out
    e = a - 1.0 + tails.iota_in + d_in + a * d_out

    log_f = np.empty_like(theta)
    for i, th in enumerate(theta):
        log_f[i] = (np.log(params.p / d_out) + (d_in / a - 1.0) * np.log(th)
                    + d_out * np.log1p(-th) + _log_inner(th, a, e))

    shift = float(log_f.max())
    raw = np.exp(log_f - shift)
    mass = float(integrate.trapezoid(raw, theta)) if theta.size > 1 else float(raw.sum())
    density = raw / mass
    debug_logger.log('theory', "angular density: a=%.4f, %d points, log-normalization %.6g",
                     a, theta.size, shift + np.log(mass))
    return AngularGrid(theta=theta, density=density, log_normalization=shift + np.log(mass), a=a)


def default_theta_grid(points: int = 512) -> np.ndarray:
    """Midpoint-style grid that avoids the endpoints."""
    return (np.arange(points) + 0.5) / points
