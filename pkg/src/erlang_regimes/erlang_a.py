"""Steady-state measures of the M/M/N+M (Erlang-A) queue.

With ``a = mu*rho/theta`` and ``b = N*mu/theta``:

* ``J = int_0^inf exp(a (1 - e^{-theta x}) - N mu x) dx``;
* ``mu (N - rho) J = 1 - a * int_0^1 e^{a v} (1-v)^{b-1} v dv``, a
  finite-interval form that stays accurate at critical load;
* the delay probability ``P = (1 + (1/C - 1) / (mu (N - rho) J))^{-1}``.

Note the minus sign in the finite-interval form: it follows from
``d/dv[e^{a v}(1-v)^a] = -a v e^{a v}(1-v)^{a-1}`` (the form vanishes at
``N = rho``) and agrees with direct quadrature of ``J``.

``P`` itself is evaluated as ``mu J / (mu J + G)`` with
``G = (1/C - 1)/(N - rho)``, which is the same quantity with the common
factor ``N - rho`` cancelled analytically, so ``N = rho`` is not special.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .errors import DomainError
from .exact import _load, _servers, erlang_c_reciprocal_minus_one, is_integral, log_gap_integral, log_term_ratios
from .quadrature import integrate_endpoint_singular, integrate_log, peak_width


@dataclass(frozen=True)
class AbandonmentModel:
    """Service rate ``mu`` and patience (abandonment) rate ``theta``, both per unit time."""

    mu: float = 1.0
    theta: float = 1.0

    def __post_init__(self):
        for name in ("mu", "theta"):
            val = getattr(self, name)
            if not (isinstance(val, (int, float)) and math.isfinite(val) and val > 0):
                hint = " (theta = 0 is plain Erlang-C; use erlang_regimes.exact)" if name == "theta" else ""
                raise DomainError(f"{name} must be a positive finite number, got {val!r}{hint}")


@dataclass(frozen=True)
class DelayProbability:
    value: float
    c_recip_minus_one: float
    scaled_j: float


def _log_j_kernel(n, rho, m):
    """``log int_0^inf exp(-a expm1(-u) - b u) du`` (J after ``u = theta x``)."""
    a = m.mu * rho / m.theta
    b = n * m.mu / m.theta

    def log_f(u):
        return -a * math.expm1(-u) - b * u

    mode = max(0.0, math.log(a / b))
    slope = a - b if mode == 0.0 else 0.0
    width = peak_width(-a * math.exp(-mode), slope)
    return integrate_log(log_f, 0.0, math.inf, mode, width, what="J integral")


def log_j_integral(n, rho, m):
    """Natural log of :func:`j_integral`; use it when ``J`` would overflow."""
    n = _servers(n)
    rho = _load(rho)
    return _log_j_kernel(n, rho, m).log_value - math.log(m.theta)


def j_integral(n, rho, m):
    """The Erlang-A kernel ``J(N, rho; mu, theta)`` by adaptive quadrature."""
    return math.exp(log_j_integral(n, rho, m))


def _log_finite_interval_integral(a, b):
    """``log int_0^1 e^{a v} (1-v)^{b-1} v dv``."""
    if b < 1.0:
        # integrable singularity at v = 1; fold (1-v)^(b-1) into the weight
        res = integrate_endpoint_singular(
            lambda v: math.exp(a * (v - 1.0)) * v, 0.0, 1.0, 0.0, b - 1.0, what="scaled-J integral"
        )
        return res.log_value + a

    def log_f(v):
        if v <= 0.0 or v >= 1.0:
            return -math.inf
        return a * v + (b - 1.0) * math.log1p(-v) + math.log(v)

    d = a - b
    root = math.sqrt(d * d + 4.0 * a)
    mode = (d + root) / (2.0 * a) if d >= 0 else 2.0 / (root - d)
    mode = min(mode, 1.0 - 1e-16)
    curvature = -(b - 1.0) / (1.0 - mode) ** 2 - 1.0 / mode**2
    return integrate_log(log_f, 0.0, 1.0, mode, peak_width(curvature), what="scaled-J integral").log_value


def scaled_j(n, rho, m):
    """``mu (N - rho) J`` through its finite-interval representation.

    Has the sign of ``N - rho`` (exactly 0 in exact arithmetic at
    ``N = rho``) and is strictly increasing in ``N``. Tends to
    ``xi(-z_hat)`` along ``N = rho - z sqrt(rho)``.
    """
    n = _servers(n)
    rho = _load(rho)
    a = m.mu * rho / m.theta
    b = n * m.mu / m.theta
    log_int = _log_finite_interval_integral(a, b)
    try:
        return 1.0 - math.exp(math.log(a) + log_int)
    except OverflowError:
        return -math.inf


def delay_probability(n, rho, m):
    """Steady-state probability that an arrival to the M/M/N+M queue must wait.

    Real ``N`` is accepted. The returned components are ``1/C - 1`` and
    ``mu (N - rho) J``; away from ``N = rho`` they satisfy
    ``value == 1 / (1 + c_recip_minus_one / scaled_j)``.
    """
    n = _servers(n)
    rho = _load(rho)
    log_mu_j = math.log(m.mu) + log_j_integral(n, rho, m)
    log_g = log_gap_integral(n, rho)
    # P = 1 / (1 + G / (mu J))
    value = 1.0 / (1.0 + math.exp(min(log_g - log_mu_j, 700.0)))
    return DelayProbability(
        value=value,
        c_recip_minus_one=erlang_c_reciprocal_minus_one(n, rho),
        scaled_j=scaled_j(n, rho, m),
    )


def _log_state_weights(n, rho, m):
    """Unnormalised log weights of states ``0..N-1`` relative to ``rho^N/N!``, and the log normaliser."""
    log_w = log_term_ratios(n, rho)
    log_tail = math.log(n * m.mu) + log_j_integral(n, rho, m)
    log_norm = float(logsumexp(np.append(log_w, log_tail)))
    return log_w, log_norm


def state_probabilities(n, rho, m):
    """``p_0..p_{N-1}``: probabilities of ``i < N`` customers in the system (integer ``N``)."""
    n = _servers(n)
    rho = _load(rho)
    if not is_integral(n):
        raise DomainError(f"state probabilities need an integer server count, got n={n!r}")
    log_w, log_norm = _log_state_weights(int(n), rho, m)
    return np.exp(log_w - log_norm)


def state_probability(i, n, rho, m):
    """Probability of exactly ``i`` customers in the system, for ``0 <= i < N``.

    The closed form only covers states below ``N``; ``i >= N`` raises
    :class:`DomainError`.
    """
    n = _servers(n)
    if not is_integral(n):
        raise DomainError(f"state probabilities need an integer server count, got n={n!r}")
    if int(i) != i or not 0 <= i < n:
        raise DomainError(f"state index must be an integer in [0, N-1] = [0, {int(n) - 1}], got i={i!r}")
    return float(state_probabilities(n, rho, m)[int(i)])
