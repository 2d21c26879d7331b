"""Adaptive quadrature of ``exp(log_f)`` over sharply peaked integrands.

The Erlang integrals (for instance ``rho * int_0^inf exp(-rho v) (1+v)^(N-1) v dv``)
have a single log-concave peak whose height easily exceeds the double range
and whose width shrinks like ``1/sqrt(rho)``. The integrand is therefore
rescaled by its peak value and the interval is split around the peak before
handing each piece to QUADPACK, so that a narrow spike inside a semi-infinite
range is never missed. Results come back as logarithms.
"""

import math
import warnings
from dataclasses import dataclass

from scipy import integrate

from .errors import QuadratureError

EPSREL = 1e-13
# estimated relative error above which a result is rejected
FAIL_REL = 1e-9
LIMIT = 500

# peak-relative offsets (in units of the peak width) used as break points
_BREAKS = (1.0, 6.0, 40.0)


@dataclass(frozen=True)
class LogIntegral:
    log_value: float
    rel_error: float

    @property
    def value(self):
        return math.exp(self.log_value)


def _quad(f, lo, hi, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err, *_ = integrate.quad(f, lo, hi, epsabs=0.0, epsrel=EPSREL, limit=LIMIT, full_output=1, **kw)
    return val, err


def peak_width(curvature, slope=0.0):
    """Length scale of a peak given ``log_f''`` and, at a boundary mode, ``log_f'``."""
    w = 1.0 / math.sqrt(-curvature) if curvature < 0 else math.inf
    if slope:
        w = min(w, 1.0 / abs(slope))
    if not math.isfinite(w):
        w = 1.0
    return w


def integrate_log(log_f, lo, hi, mode, width, what="integral"):
    """Integrate ``exp(log_f(t))`` over ``[lo, hi]`` (``hi`` may be ``inf``).

    ``mode`` is the location of the maximum of ``log_f`` within the interval
    and ``width`` its characteristic scale. Raises :class:`QuadratureError`
    when the estimated relative error exceeds ``FAIL_REL``.
    """
    peak = log_f(mode)
    if not math.isfinite(peak):
        raise QuadratureError(f"{what}: integrand peak is not finite (log peak = {peak!r})")

    def f(t):
        return math.exp(log_f(t) - peak)

    points = {lo, mode, hi}
    for k in _BREAKS:
        for p in (mode - k * width, mode + k * width):
            if lo < p < hi:
                points.add(p)
    edges = sorted(points)
    total = 0.0
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        if b <= a:
            continue
        v, e = _quad(f, a, b)
        total += v
        err += e
    if not total > 0.0:
        raise QuadratureError(f"{what}: quadrature returned a non-positive value {total!r}", math.inf)
    rel = err / total
    if rel > FAIL_REL:
        raise QuadratureError(f"{what}: estimated relative error {rel:.3g} exceeds {FAIL_REL:g}", rel)
    return LogIntegral(peak + math.log(total), rel)


def integrate_endpoint_singular(f, lo, hi, alpha, beta, what="integral"):
    """Integrate ``f(t) * (t - lo)**alpha * (hi - t)**beta`` on a finite interval.

    Uses QUADPACK's algebraic-weight rule, which absorbs integrable endpoint
    singularities (``alpha, beta > -1``). ``f`` must be bounded and positive.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err, *_ = integrate.quad(
            f, lo, hi, weight="alg", wvar=(alpha, beta), epsabs=0.0, epsrel=EPSREL, limit=LIMIT, full_output=1
        )
    if not val > 0.0:
        raise QuadratureError(f"{what}: quadrature returned a non-positive value {val!r}", math.inf)
    rel = err / val
    if rel > FAIL_REL:
        raise QuadratureError(f"{what}: estimated relative error {rel:.3g} exceeds {FAIL_REL:g}", rel)
    return LogIntegral(math.log(val), rel)
