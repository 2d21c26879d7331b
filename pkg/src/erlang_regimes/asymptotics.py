"""Staffing rules, many-server regime classification and limiting values.

A staffing rule is ``N(rho) = rho + sum_j c_j * rho**alpha_j`` with
``0 <= alpha_j < 1``. Its leading term decides the regime:

============  =========================  ======================
leading term  regime                      z
============  =========================  ======================
alpha > 1/2   overloaded (c < 0) or       undefined
              underloaded (c > 0) Omega
alpha = 1/2   Theta, sign of z            ``z = -c``
alpha < 1/2   Balanced                    ``0``
============  =========================  ======================

``z`` is read off the rule coefficient. It equals ``lim (rho - N)/sqrt(N)``
along the rule; at finite ``rho`` the two differ by ``O(rho**-1/2)``.
"""

import enum
import math
from dataclasses import dataclass, field

from .erlang_a import AbandonmentModel
from .errors import DomainError
from .normal import X_MAX, xi


class Regime(enum.Enum):
    OVERLOADED_OMEGA = "OverloadedOmega"
    OVERLOADED_THETA = "OverloadedTheta"
    BALANCED = "Balanced"
    UNDERLOADED_THETA = "UnderloadedTheta"
    UNDERLOADED_OMEGA = "UnderloadedOmega"

    @property
    def is_theta(self):
        return self in (Regime.OVERLOADED_THETA, Regime.UNDERLOADED_THETA)


class LimitForm(enum.Enum):
    INFINITY = "Infinity"
    ONE_MINUS_XI_INVERSE = "OneMinusXiInverse"
    ONE = "One"
    ZERO = "Zero"
    PROP_ONE_FORM = "PropOneForm"


@dataclass(frozen=True)
class StaffingRule:
    """``N(rho) = rho + sum(c * rho**alpha for c, alpha in terms)``.

    Terms are stored with strictly decreasing exponents; zero coefficients
    are dropped.
    """

    terms: tuple = ()

    def __post_init__(self):
        cleaned = []
        for c, alpha in self.terms:
            c, alpha = float(c), float(alpha)
            if not (math.isfinite(c) and math.isfinite(alpha)):
                raise DomainError(f"rule term ({c!r}, {alpha!r}) is not finite")
            if not 0.0 <= alpha < 1.0:
                raise DomainError(
                    f"exponent {alpha:g} is outside [0, 1): the staffing correction must be sublinear in rho"
                )
            if c != 0.0:
                cleaned.append((c, alpha))
        cleaned.sort(key=lambda t: -t[1])
        alphas = [a for _, a in cleaned]
        if len(set(alphas)) != len(alphas):
            raise DomainError(f"repeated exponent in staffing rule: {alphas}")
        object.__setattr__(self, "terms", tuple(cleaned))

    @classmethod
    def square_root(cls, beta):
        """The square-root safety rule ``N = rho + beta * sqrt(rho)``."""
        return cls(((beta, 0.5),))

    def servers(self, rho):
        return rho + sum(c * rho**alpha for c, alpha in self.terms)

    def __str__(self):
        if not self.terms:
            return "N = rho"
        parts = " ".join(f"{'-' if c < 0 else '+'} {abs(c):g}*rho^{a:g}" for c, a in self.terms)
        return f"N = rho {parts}"


@dataclass(frozen=True)
class RegimeClass:
    kind: Regime
    z: float | None = None
    z_hat: float | None = None

    def __post_init__(self):
        k, z = self.kind, self.z
        if k is Regime.BALANCED and z != 0.0:
            raise DomainError("a Balanced regime has z = 0")
        if k is Regime.OVERLOADED_THETA and not (z is not None and z > 0):
            raise DomainError("an OverloadedTheta regime needs z > 0")
        if k is Regime.UNDERLOADED_THETA and not (z is not None and z < 0):
            raise DomainError("an UnderloadedTheta regime needs z < 0")
        if k in (Regime.OVERLOADED_OMEGA, Regime.UNDERLOADED_OMEGA) and z is not None:
            raise DomainError("Omega regimes carry no finite z")

    @classmethod
    def from_z(cls, z, model=None):
        """Theta/Balanced class for a given ``z``."""
        z = float(z)
        kind = Regime.BALANCED if z == 0 else (Regime.OVERLOADED_THETA if z > 0 else Regime.UNDERLOADED_THETA)
        return cls(kind, z).with_model(model)

    def with_model(self, model):
        if model is None or self.z is None:
            return self
        return RegimeClass(self.kind, self.z, self.z * math.sqrt(model.mu / model.theta))


def classify(rule, model=None):
    """Regime of a staffing rule; attach ``model`` to also get ``z_hat``."""
    if not rule.terms or rule.terms[0][1] < 0.5:
        return RegimeClass(Regime.BALANCED, 0.0).with_model(model)
    c, alpha = rule.terms[0]
    if alpha > 0.5:
        return RegimeClass(Regime.OVERLOADED_OMEGA if c < 0 else Regime.UNDERLOADED_OMEGA)
    return RegimeClass.from_z(-c, model)


@dataclass(frozen=True)
class LimitResult:
    """Limiting value; ``value`` is ``math.inf`` only for the explicit Infinity form."""

    value: float
    closed_form: LimitForm
    expression: str = field(default="", compare=False)


def erlang_c_limit_at(z):
    """``1 / (1 - xi(z))``; needs ``|z| <= X_MAX``."""
    return 1.0 / (1.0 - xi(z))


def delay_limit_at(z, model):
    """``1 / (1 - xi(z) / xi(-z_hat))`` with ``z_hat = z sqrt(mu/theta)``, continuous at ``z = 0``."""
    z = float(z)
    if z == 0.0:
        return 1.0 / (1.0 + math.sqrt(model.theta / model.mu))
    z_hat = z * math.sqrt(model.mu / model.theta)
    if abs(z_hat) > X_MAX:
        raise DomainError(f"z_hat = {z_hat:g} is outside the working range |z_hat| <= {X_MAX:g}")
    return 1.0 / (1.0 - xi(z) / xi(-z_hat))


def limit_erlang_c(regime):
    """``lim C(N, rho)`` along a rule in the given regime."""
    k = regime.kind
    if k is Regime.OVERLOADED_OMEGA:
        return LimitResult(math.inf, LimitForm.INFINITY, "inf")
    if k is Regime.UNDERLOADED_OMEGA:
        return LimitResult(0.0, LimitForm.ZERO, "0")
    if k is Regime.BALANCED:
        return LimitResult(1.0, LimitForm.ONE_MINUS_XI_INVERSE, "(1 - xi(0))^-1 = 1")
    return LimitResult(erlang_c_limit_at(regime.z), LimitForm.ONE_MINUS_XI_INVERSE, f"(1 - xi({regime.z:g}))^-1")


def limit_delay_probability(regime, model):
    """``lim P(N, rho; mu, theta)`` for the M/M/N+M queue along a rule in the given regime."""
    if not isinstance(model, AbandonmentModel):
        raise DomainError("an AbandonmentModel is required for the delay-probability limit")
    k = regime.kind
    if k is Regime.OVERLOADED_OMEGA:
        return LimitResult(1.0, LimitForm.ONE, "1")
    if k is Regime.UNDERLOADED_OMEGA:
        return LimitResult(0.0, LimitForm.ZERO, "0")
    if k is Regime.BALANCED:
        return LimitResult(
            1.0 / (1.0 + math.sqrt(model.theta / model.mu)), LimitForm.PROP_ONE_FORM, "(1 + sqrt(theta/mu))^-1"
        )
    z_hat = regime.z * math.sqrt(model.mu / model.theta)
    return LimitResult(
        delay_limit_at(regime.z, model), LimitForm.PROP_ONE_FORM, f"(1 - xi({regime.z:g})/xi({-z_hat:g}))^-1"
    )
