"""Exact Erlang-B and Erlang-C values for integer and real server counts.

Four independent routes to ``C(N, rho)``:

* ``DIRECT_SUM``   the textbook formula, summed in log space (integer N);
* ``RECURSION``    the Erlang-B recursion composed with the B/C relation
                   ``1/C = 1 + (1 - rho/N) (1/B - 1)`` (integer N);
* ``QUADRATURE_A`` ``1/C = rho * int_0^inf exp(-rho v) (1+v)^(N-1) v dv``;
* ``QUADRATURE_B`` ``1/C = 1 + (N - rho) * int_0^inf exp(N s - rho (e^s - 1)) ds``.

The quadrature routes accept any real ``N > 0``. Internally the gap
``1/C - 1`` is carried as a sign and a log-magnitude, which keeps the sign
exact at ``N = rho`` and avoids overflow when ``N`` is far above ``rho``.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, logsumexp

from .errors import DomainError, NumericalError
from .quadrature import integrate_log, peak_width

_EPS = float(np.finfo(float).eps)
# above this size the recursion state is tracked as a logarithm
_R_SWITCH = 1e280


class Method(enum.Enum):
    DIRECT_SUM = "direct-sum"
    RECURSION = "recursion"
    QUADRATURE_A = "quadrature-a"
    QUADRATURE_B = "quadrature-b"


@dataclass(frozen=True)
class ErlangValue:
    value: float
    method: Method
    est_abs_error: float

    def __float__(self):
        return float(self.value)


def is_integral(n):
    return float(n).is_integer()


def _servers(n, round_n=False, allow_zero=False):
    n = float(n)
    if not math.isfinite(n) or n < 0 or (n == 0 and not allow_zero):
        raise DomainError(f"server count must be a positive finite number, got n={n!r}")
    if round_n:
        n = float(round(n))
        if n == 0 and not allow_zero:
            raise DomainError("server count rounds to 0")
    return n


def _load(rho):
    rho = float(rho)
    if not math.isfinite(rho) or rho <= 0:
        raise DomainError(f"offered load must be a positive finite number, got rho={rho!r}")
    return rho


def _default_method(n):
    return Method.RECURSION if is_integral(n) else Method.QUADRATURE_A


def _require_integer(n, method):
    if not is_integral(n):
        raise DomainError(f"method {method.value} needs an integer server count, got n={n!r}")


# ---------------------------------------------------------------------------
# building blocks


def log_partial_sums(n, rho):
    """``(log sum_{i<N} rho^i/i!, log rho^N/N!)`` for integer ``N >= 1``."""
    n = int(n)
    i = np.arange(n, dtype=float)
    log_s = float(logsumexp(i * math.log(rho) - gammaln(i + 1.0)))
    log_t = n * math.log(rho) - float(gammaln(n + 1.0))
    return log_s, log_t


def log_term_ratios(n, rho):
    """``log((rho^i/i!) / (rho^N/N!))`` for ``i = 0..N-1`` (integer ``N >= 1``).

    Built from cumulative sums of ``log(j/rho)`` anchored at ``i = N`` rather
    than from log-factorials, whose absolute rounding (~1e-13 near ``N = 100``)
    would otherwise dominate the sum when ``rho > N``.
    """
    n = int(n)
    j = np.arange(n, 0, -1, dtype=float)
    # entry k is log(T_{N-1-k}/T_N) = sum_{j=N-k}^{N} log(j/rho)
    back = np.cumsum(np.log(j / rho))
    return back[::-1]


def log_ratio_sum(n, rho):
    """``log(sum_{i<N} rho^i/i! / (rho^N/N!))``, which equals ``log(1/B - 1)``."""
    return float(logsumexp(log_term_ratios(n, rho)))


def log_blocking_gap(n, rho):
    """``log(1/B(N, rho) - 1)`` by the recursion ``R_k = (k/rho)(1 + R_{k-1})``.

    Returns ``-inf`` for ``N = 0``.
    """
    n = int(n)
    r = 0.0
    k = 1
    while k <= n:
        r = (k / rho) * (1.0 + r)
        k += 1
        if r > _R_SWITCH:
            break
    if k > n:
        return math.log(r) if r > 0 else -math.inf
    lr = math.log(r)
    log_rho = math.log(rho)
    while k <= n:
        lr = math.log(k) - log_rho + lr + math.log1p(math.exp(-lr))
        k += 1
    return lr


def _log_gap_kernel(n, rho):
    """``log int_0^inf exp(N s - rho (e^s - 1)) ds`` by quadrature."""

    def log_f(s):
        if s > 700.0:
            return -math.inf
        return n * s - rho * math.expm1(s)

    mode = max(0.0, math.log(n / rho))
    slope = n - rho if mode == 0.0 else 0.0
    width = peak_width(-rho * math.exp(mode), slope)
    return integrate_log(log_f, 0.0, math.inf, mode, width, what="gap integral")


def _log_cinv_kernel_a(n, rho):
    """``log int_0^inf exp(-rho v) (1+v)^(N-1) v dv`` by quadrature."""

    def log_f(v):
        if v <= 0.0:
            return -math.inf
        return -rho * v + (n - 1.0) * math.log1p(v) + math.log(v)

    d = n - rho
    root = math.sqrt(d * d + 4.0 * rho)
    mode = (d + root) / (2.0 * rho) if d >= 0 else 2.0 / (root - d)
    curvature = -(n - 1.0) / (1.0 + mode) ** 2 - 1.0 / mode**2
    return integrate_log(log_f, 0.0, math.inf, mode, peak_width(curvature), what="reciprocal-C integral")


def _log_binv_kernel(n, rho):
    """``log int_0^inf exp(-rho v) (1+v)^N dv`` by quadrature."""

    def log_f(v):
        return -rho * v + n * math.log1p(v)

    mode = max(0.0, n / rho - 1.0)
    slope = n - rho if mode == 0.0 else 0.0
    curvature = -n / (1.0 + mode) ** 2
    return integrate_log(log_f, 0.0, math.inf, mode, peak_width(curvature, slope), what="reciprocal-B integral")


@dataclass(frozen=True)
class _Gap:
    """``1/C - 1 = sign * exp(log_abs)`` with a relative error estimate."""

    sign: int
    log_abs: float
    rel_error: float

    @property
    def value(self):
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log_abs)
        except OverflowError:
            return self.sign * math.inf


def _sign(x):
    return (x > 0) - (x < 0)


def _gap(n, rho, method):
    sign = _sign(n - rho)
    if method is Method.DIRECT_SUM:
        _require_integer(n, method)
        if sign == 0:
            return _Gap(0, -math.inf, 0.0)
        return _Gap(sign, math.log(abs(1.0 - rho / n)) + log_ratio_sum(n, rho), (n + 10) * _EPS)
    if method is Method.RECURSION:
        _require_integer(n, method)
        if sign == 0:
            return _Gap(0, -math.inf, 0.0)
        return _Gap(sign, math.log(abs(1.0 - rho / n)) + log_blocking_gap(n, rho), 2 * (n + 5) * _EPS)
    if method is Method.QUADRATURE_B:
        if sign == 0:
            return _Gap(0, -math.inf, 0.0)
        res = _log_gap_kernel(n, rho)
        return _Gap(sign, math.log(abs(n - rho)) + res.log_value, res.rel_error + 8 * _EPS)
    raise DomainError(f"method {method.value} does not give a sign-exact 1/C - 1")


def _c_from_gap(gap):
    """Return ``(C, abs_error)`` from the gap ``1/C - 1``."""
    if gap.sign == 0:
        return 1.0, 0.0
    if gap.sign > 0:
        log_cinv = float(np.logaddexp(0.0, gap.log_abs))
        c = math.exp(-log_cinv)
        x = math.exp(min(gap.log_abs, 700.0))
        return c, c * c * x * gap.rel_error
    if gap.log_abs >= 0.0:
        raise NumericalError("1/C - 1 evaluated at or below -1; result lost to cancellation", gap.rel_error)
    cinv = -math.expm1(gap.log_abs)
    c = 1.0 / cinv
    return c, c * c * math.exp(gap.log_abs) * gap.rel_error


# ---------------------------------------------------------------------------
# public API


def erlang_b(n, rho, method=None, round_n=False):
    """Blocking probability ``B(N, rho)`` of the M/M/N/N loss system.

    Integer ``N`` defaults to the reciprocal recursion; real ``N`` uses the
    integral ``1/B = rho * int_0^inf exp(-rho v) (1+v)^N dv`` (reported as
    ``QUADRATURE_A``, the same kernel family). ``B(0, rho) = 1``.
    """
    n = _servers(n, round_n, allow_zero=True)
    rho = _load(rho)
    if method is None:
        method = _default_method(n)
    if n == 0:
        return ErlangValue(1.0, method, 0.0)
    if method is Method.RECURSION:
        _require_integer(n, method)
        lr = log_blocking_gap(n, rho)
        b = math.exp(-float(np.logaddexp(0.0, lr)))
        return ErlangValue(b, method, 2 * (n + 5) * _EPS * b)
    if method is Method.DIRECT_SUM:
        _require_integer(n, method)
        b = math.exp(-float(np.logaddexp(0.0, log_ratio_sum(n, rho))))
        return ErlangValue(b, method, (n + 10) * _EPS * b)
    if method is Method.QUADRATURE_A:
        res = _log_binv_kernel(n, rho)
        b = math.exp(-(math.log(rho) + res.log_value))
        return ErlangValue(b, method, b * (res.rel_error + 8 * _EPS))
    raise DomainError(f"erlang_b does not support method {method.value}")


def erlang_c(n, rho, method=None, round_n=False):
    """Erlang-C value ``C(N, rho)``, the M/M/N delay probability when ``rho < N``.

    For ``rho >= N`` the same expression is returned (it exceeds 1 once
    ``rho > N``). Defaults: ``RECURSION`` for integer ``N``, ``QUADRATURE_A``
    otherwise. ``round_n`` rounds ``N`` to the nearest integer first.
    """
    n = _servers(n, round_n)
    rho = _load(rho)
    if method is None:
        method = _default_method(n)
    if method is Method.QUADRATURE_A:
        res = _log_cinv_kernel_a(n, rho)
        c = math.exp(-(math.log(rho) + res.log_value))
        return ErlangValue(c, method, c * (res.rel_error + 8 * _EPS))
    c, err = _c_from_gap(_gap(n, rho, method))
    return ErlangValue(c, method, err)


def erlang_c_reciprocal_minus_one(n, rho, method=None, round_n=False):
    """``1/C(N, rho) - 1`` without forming ``C``; its sign is exactly ``sign(N - rho)``.

    May be ``+inf`` when ``N`` is so far above ``rho`` that the value
    overflows. ``QUADRATURE_A`` is not accepted (it cannot guarantee the sign).
    """
    n = _servers(n, round_n)
    rho = _load(rho)
    if method is None:
        method = Method.RECURSION if is_integral(n) else Method.QUADRATURE_B
    return _gap(n, rho, method).value


def log_gap_integral(n, rho, method=None, round_n=False):
    """``log((1/C - 1) / (N - rho))``, i.e. ``log int_0^inf exp(N s - rho (e^s - 1)) ds``.

    Finite at ``N = rho``, so it is the well-conditioned ingredient for
    quantities that divide ``1/C - 1`` by something that also vanishes there.
    """
    n = _servers(n, round_n)
    rho = _load(rho)
    if method is None:
        method = Method.RECURSION if is_integral(n) else Method.QUADRATURE_B
    if method is Method.RECURSION:
        _require_integer(n, method)
        return log_blocking_gap(n, rho) - math.log(n)
    if method is Method.DIRECT_SUM:
        _require_integer(n, method)
        return log_ratio_sum(n, rho) - math.log(n)
    if method is Method.QUADRATURE_B:
        return _log_gap_kernel(n, rho).log_value
    raise DomainError(f"log_gap_integral does not support method {method.value}")
