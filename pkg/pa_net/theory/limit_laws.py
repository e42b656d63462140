"""
Limit Laws
Limiting joint and marginal degree pmfs of directed PA (identical for the
traditional and the Poisson-measured model), tail exponents and their
inversion.

The joint pmf is a mixture over T ~ Uniform(0, 1) of two independent negative
binomials. All integrals are taken in u = t^(1/iota_in), which moves the
mass of the in-factor away from the origin; log-gamma keeps the
coefficients finite for large offsets and degrees.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy import integrate, special

from pa_net.errors import InfeasibleInversionError, InvalidParameterError, QuadratureError
from pa_net.graph.degree_state import ModelParams
from pa_net.theory.pmf_grid import PmfGrid
from pa_net.debug.tools.run_debug_logger import debug_logger

QUAD_TOL = 1e-9


@dataclass(frozen=True)
class TailExponents:
    iota_in: float
    iota_out: float

    @property
    def a(self) -> float:
        """Angular exponent iota_in / iota_out."""
        return self.iota_in / self.iota_out


def tail_exponents(params: ModelParams) -> TailExponents:
    p = params.p
    return TailExponents(
        iota_in=1.0 + params.delta_in * p,
        iota_out=(1.0 + params.delta_out * p) / (1.0 - p),
    )


def delta_from_tail(iota_in: float, iota_out: float, p: float) -> Tuple[float, float]:
    """Invert the tail exponents to (delta_in, delta_out) for a given p."""
    if not 0.0 < p < 1.0:
        raise InvalidParameterError(f"p must lie in (0, 1), got {p}")
    delta_in = (iota_in - 1.0) / p
    delta_out = (iota_out * (1.0 - p) - 1.0) / p
    if delta_in <= 0.0 or delta_out <= 0.0:
        raise InfeasibleInversionError(
            f"tail indices (iota_in={iota_in}, iota_out={iota_out}) with p={p} give "
            f"non-positive offsets ({delta_in:.6g}, {delta_out:.6g})",
            iota_in, iota_out, p,
        )
    return delta_in, delta_out


def _log_nb(delta, q, k):
    return (special.gammaln(delta + k) - special.gammaln(delta) - special.gammaln(k + 1.0)
            + special.xlogy(delta, q) + special.xlog1py(k, -q))


def nb_pmf(delta: float, q: float, k: int) -> float:
    """P(Z = k) for Z with generating function (s + (1 - s)/q)^(-delta)."""
    if not delta > 0:
        raise InvalidParameterError(f"delta must be positive, got {delta}")
    if not 0.0 < q <= 1.0:
        raise InvalidParameterError(f"q must lie in (0, 1], got {q}")
    if k < 0:
        raise InvalidParameterError(f"k must be non-negative, got {k}")
    if q == 1.0:
        return 1.0 if k == 0 else 0.0
    return float(np.exp(_log_nb(delta, q, k)))


def _quad(fn, points: List[float], what: str) -> float:
    pts = sorted({pt for pt in points if 0.0 < pt < 1.0}) or None
    result = integrate.quad(fn, 0.0, 1.0, epsabs=1e-12, epsrel=1e-10, limit=400,
                            points=pts, full_output=1)
    value, err = result[0], result[1]
    if err > QUAD_TOL:
        raise QuadratureError(f"{what}: quadrature error estimate {err:.3g} exceeds {QUAD_TOL}")
    debug_logger.log('theory', "%s = %.12g (err %.2g)", what, value, err)
    return float(value)


def _peak(delta: float, k: float, power: float) -> float:
    # Mode of q^delta (1-q)^k, mapped back to u through q = u^power.
    return (delta / (delta + k)) ** (1.0 / power)


def joint_limit_pmf(params: ModelParams, m: int, l: int) -> float:
    """Limit frequency of nodes with in-degree m and out-degree l."""
    if l < 1:
        raise InvalidParameterError("limit support has out-degree >= 1")
    if m < 0:
        raise InvalidParameterError("in-degree must be non-negative")
    tails = tail_exponents(params)
    c, a = tails.iota_in, tails.a
    d_in, d_out = params.delta_in, 1.0 + params.delta_out
    k_out = l - 1

    def integrand(u):
        return np.exp(np.log(c) + special.xlogy(c - 1.0, u)
                      + _log_nb(d_in, u, m) + _log_nb(d_out, u ** a, k_out))

    return _quad(integrand, [_peak(d_in, m, 1.0), _peak(d_out, k_out, a)], f"p[{m},{l}]")


def marginal_in_pmf(params: ModelParams, m: int) -> float:
    if m < 0:
        raise InvalidParameterError("in-degree must be non-negative")
    c = tail_exponents(params).iota_in
    d_in = params.delta_in

    def integrand(u):
        return np.exp(np.log(c) + special.xlogy(c - 1.0, u) + _log_nb(d_in, u, m))

    return _quad(integrand, [_peak(d_in, m, 1.0)], f"p_in[{m}]")


def marginal_out_pmf(params: ModelParams, l: int) -> float:
    if l < 1:
        raise InvalidParameterError("limit support has out-degree >= 1")
    c = tail_exponents(params).iota_out
    d_out = 1.0 + params.delta_out

    def integrand(w):
        return np.exp(np.log(c) + special.xlogy(c - 1.0, w) + _log_nb(d_out, w, l - 1))

    return _quad(integrand, [_peak(d_out, l - 1, 1.0)], f"p_out[{l}]")


def marginal_in_closed_form(params: ModelParams, m) -> np.ndarray:
    """c * B(delta + c, m + 1) * Gamma(delta + m) / (Gamma(delta) m!), c = iota_in."""
    c = tail_exponents(params).iota_in
    d = params.delta_in
    m = np.asarray(m, dtype=float)
    return np.exp(np.log(c) + special.gammaln(d + m) + special.gammaln(d + c)
                  - special.gammaln(d) - special.gammaln(d + c + m + 1.0))


def marginal_out_closed_form(params: ModelParams, l) -> np.ndarray:
    c = tail_exponents(params).iota_out
    d = 1.0 + params.delta_out
    k = np.asarray(l, dtype=float) - 1.0
    return np.exp(np.log(c) + special.gammaln(d + k) + special.gammaln(d + c)
                  - special.gammaln(d) - special.gammaln(d + c + k + 1.0))


def tail_constants(params: ModelParams) -> Tuple[float, float]:
    """Prefactors C with p_in[m] ~ C m^-(1+iota_in) and p_out[l] ~ C' l^-(1+iota_out)."""
    tails = tail_exponents(params)
    c_in = tails.iota_in * np.exp(special.gammaln(params.delta_in + tails.iota_in) - special.gammaln(params.delta_in))
    d_out = 1.0 + params.delta_out
    c_out = tails.iota_out * np.exp(special.gammaln(d_out + tails.iota_out) - special.gammaln(d_out))
    return float(c_in), float(c_out)


def joint_limit_grid(params: ModelParams, m_max: int, l_max: int) -> PmfGrid:
    """p[m, l] for m in 0..m_max, l in 1..l_max, integrated as one vector-valued integral."""
    tails = tail_exponents(params)
    c, a = tails.iota_in, tails.a
    d_in, d_out = params.delta_in, 1.0 + params.delta_out
    ms = np.arange(m_max + 1, dtype=float)[:, None]
    ks = np.arange(l_max, dtype=float)[None, :]

    def integrand(u):
        return np.exp(np.log(c) + special.xlogy(c - 1.0, u)
                      + _log_nb(d_in, u, ms) + _log_nb(d_out, u ** a, ks))

    peaks = sorted({_peak(d_in, m, 1.0) for m in range(m_max + 1)}
                   | {_peak(d_out, k, a) for k in range(l_max)})
    peaks = [pt for pt in peaks if 0.0 < pt < 1.0]
    values, err = integrate.quad_vec(integrand, 0.0, 1.0, epsabs=1e-11, epsrel=1e-9,
                                     norm='max', points=peaks or None, limit=2000)
    if err > QUAD_TOL:
        raise QuadratureError(f"joint grid: quadrature error estimate {err:.3g} exceeds {QUAD_TOL}")
    values = np.clip(values, 0.0, 1.0)
    return PmfGrid(
        values=values,
        m_values=np.arange(m_max + 1),
        l_values=np.arange(1, l_max + 1),
        overflow=max(0.0, 1.0 - float(values.sum())),
        kind='joint',
    )


def marginal_grid(params: ModelParams, upper: int, direction: str = 'in') -> PmfGrid:
    """Closed-form marginal over m in 0..upper (in) or l in 1..upper (out)."""
    if direction == 'in':
        axis = np.arange(upper + 1)
        values = marginal_in_closed_form(params, axis)
    elif direction == 'out':
        axis = np.arange(1, upper + 1)
        values = marginal_out_closed_form(params, axis)
    else:
        raise InvalidParameterError(f"direction must be 'in' or 'out', got {direction!r}")
    return PmfGrid(values=values, m_values=axis, overflow=max(0.0, 1.0 - float(values.sum())),
                   kind=direction)
