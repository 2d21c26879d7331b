"""Birth-death ground truth for the M/M/N and M/M/N+M queues.

The stationary law of a birth-death chain is product-form,
``pi_i ~ prod_{j<=i} arrival / d_j`` with death rates
``d_j = min(j, N) * service + max(j - N, 0) * abandonment``, so no linear
solve is needed. Weights are accumulated in log space and the chain is
truncated at a cap ``K`` whose neglected tail is bounded geometrically.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .errors import DomainError, TruncationError

TAIL_TOL = 1e-12
_MAX_DOUBLINGS = 30


@dataclass(frozen=True)
class BirthDeathSpec:
    arrival: float
    service: float
    servers: int
    abandonment: float = 0.0
    truncation: int | None = None

    def __post_init__(self):
        if not (math.isfinite(self.arrival) and self.arrival > 0):
            raise DomainError(f"arrival rate must be positive, got {self.arrival!r}")
        if not (math.isfinite(self.service) and self.service > 0):
            raise DomainError(f"service rate must be positive, got {self.service!r}")
        if int(self.servers) != self.servers or self.servers < 1:
            raise DomainError(f"servers must be a positive integer, got {self.servers!r}")
        if not (math.isfinite(self.abandonment) and self.abandonment >= 0):
            raise DomainError(f"abandonment rate must be non-negative, got {self.abandonment!r}")
        if self.abandonment == 0 and self.arrival >= self.servers * self.service:
            raise DomainError(
                f"M/M/N chain without abandonment is unstable: arrival {self.arrival:g} >= "
                f"servers*service {self.servers * self.service:g}"
            )
        if self.truncation is not None and self.truncation <= self.servers:
            raise DomainError(f"truncation cap must exceed servers ({self.servers}), got {self.truncation!r}")

    def default_truncation(self):
        lam, mu, n = self.arrival, self.service, self.servers
        extra = 20.0 * math.sqrt(lam / max(self.abandonment, mu)) + 20.0 * lam / (n * mu)
        return n + math.ceil(extra)

    def death_rates(self, k):
        """Death rates ``d_1..d_k``."""
        j = np.arange(1, k + 1, dtype=float)
        return np.minimum(j, self.servers) * self.service + np.maximum(j - self.servers, 0.0) * self.abandonment


@dataclass(frozen=True)
class Stationary:
    pi: np.ndarray
    tail_mass: float
    truncation: int


def _solve(spec, k):
    log_steps = math.log(spec.arrival) - np.log(spec.death_rates(k))
    log_w = np.concatenate(([0.0], np.cumsum(log_steps)))
    log_w -= logsumexp(log_w)
    pi = np.exp(log_w)
    pi /= math.fsum(pi)
    # states beyond K have step ratios at most r = arrival / d_{K+1}
    r = spec.arrival / spec.death_rates(k + 1)[-1]
    tail = pi[-1] * r / (1.0 - r) if r < 1.0 else math.inf
    return Stationary(pi, tail, k)


def steady_state(spec):
    """Stationary distribution over ``{0..K}``.

    With an explicit ``spec.truncation`` the cap is used as given and a tail
    bound above ``TAIL_TOL`` raises :class:`TruncationError`. Without one the
    default heuristic cap is doubled until the bound is met.
    """
    if spec.truncation is not None:
        st = _solve(spec, spec.truncation)
        if st.tail_mass > TAIL_TOL:
            raise TruncationError(
                f"tail mass bound {st.tail_mass:.3g} at K={spec.truncation} exceeds {TAIL_TOL:g}; use a larger K",
                st.tail_mass,
            )
        return st
    k = spec.default_truncation()
    for _ in range(_MAX_DOUBLINGS):
        st = _solve(spec, k)
        if st.tail_mass <= TAIL_TOL:
            return st
        k *= 2
    raise TruncationError(f"no truncation up to K={k} bounds the tail below {TAIL_TOL:g}", st.tail_mass)


def delay_probability_from_pi(spec, pi):
    """``sum_{i >= N} pi_i``, the probability an arrival waits (PASTA)."""
    return math.fsum(np.asarray(pi)[spec.servers :])
