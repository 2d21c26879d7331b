"""Empirical check of the many-server limits along a staffing rule."""

import enum
import logging
import math
from dataclasses import dataclass

from .asymptotics import classify, limit_delay_probability, limit_erlang_c
from .erlang_a import AbandonmentModel, delay_probability
from .errors import DomainError, NumericalError
from .exact import erlang_c

log = logging.getLogger(__name__)


class Target(enum.Enum):
    ERLANG_C = "erlang-c"
    DELAY_PROBABILITY = "delay-probability"


@dataclass(frozen=True)
class QueueModel:
    """Service rate ``mu`` and, for Erlang-A targets, abandonment rate ``theta``.

    ``arrival_rate`` is optional; convergence studies sweep it.
    """

    service_rate: float = 1.0
    abandonment_rate: float | None = None
    arrival_rate: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.service_rate) and self.service_rate > 0):
            raise DomainError(f"service rate must be positive, got {self.service_rate!r}")
        if self.abandonment_rate is not None and not (
            math.isfinite(self.abandonment_rate) and self.abandonment_rate > 0
        ):
            raise DomainError(f"abandonment rate must be positive, got {self.abandonment_rate!r}")

    def offered_load(self, arrival_rate=None):
        lam = self.arrival_rate if arrival_rate is None else arrival_rate
        return lam / self.service_rate

    def abandonment(self):
        if self.abandonment_rate is None:
            raise DomainError("this target needs an abandonment rate (theta)")
        return AbandonmentModel(self.service_rate, self.abandonment_rate)


@dataclass(frozen=True)
class ConvergenceRecord:
    lam: float
    rho: float
    n: float
    finite_value: float
    limit_value: float
    abs_error: float  # inf when the limit is infinite, nan when the row failed
    error: str | None = None

    @property
    def ok(self):
        return self.error is None


def _finite_value(target, n, rho, model, round_n):
    if round_n:
        n = float(round(n))
    if target is Target.ERLANG_C:
        return n, erlang_c(n, rho).value
    return n, delay_probability(n, rho, model.abandonment()).value


def run_convergence_study(rule, model, lambdas, target=Target.ERLANG_C, round_n=False):
    """Finite-system value, limiting value and their gap for each arrival rate.

    Rows come back sorted by arrival rate. A row whose evaluation fails is
    kept with ``nan`` values and the message in ``error``. ``round_n`` staffs
    ``round(N)`` servers, which perturbs ``N - rho`` by up to 1/2 and so the
    gap to the limit by ``O(rho**-1/2)``.
    """
    target = Target(target)
    lambdas = sorted(float(x) for x in lambdas)
    if any(not (math.isfinite(x) and x > 0) for x in lambdas):
        raise DomainError(f"arrival rates must be positive, got {lambdas}")
    if target is Target.ERLANG_C:
        limit = limit_erlang_c(classify(rule)).value
    else:
        m = model.abandonment()
        limit = limit_delay_probability(classify(rule, m), m).value

    rows = []
    for lam in lambdas:
        rho = model.offered_load(lam)
        n = rule.servers(rho)
        try:
            if not n > 0:
                raise DomainError(f"rule gives non-positive N = {n:g} at rho = {rho:g}")
            n, value = _finite_value(target, n, rho, model, round_n)
        except (DomainError, NumericalError) as exc:
            log.warning("lambda=%g: %s", lam, exc)
            rows.append(ConvergenceRecord(lam, rho, n, math.nan, limit, math.nan, str(exc)))
            continue
        err = math.inf if math.isinf(limit) else abs(value - limit)
        rows.append(ConvergenceRecord(lam, rho, n, value, limit, err))
    return rows
