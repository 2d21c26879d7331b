"""Erlang-B/C and Erlang-A values with their many-server limits."""

from .asymptotics import (
    LimitForm,
    LimitResult,
    Regime,
    RegimeClass,
    StaffingRule,
    classify,
    delay_limit_at,
    erlang_c_limit_at,
    limit_delay_probability,
    limit_erlang_c,
)
from .birth_death import BirthDeathSpec, Stationary, delay_probability_from_pi, steady_state
from .convergence import ConvergenceRecord, QueueModel, Target, run_convergence_study
from .erlang_a import (
    AbandonmentModel,
    DelayProbability,
    delay_probability,
    j_integral,
    scaled_j,
    state_probabilities,
    state_probability,
)
from .errors import DomainError, NumericalError, QuadratureError, TruncationError
from .exact import ErlangValue, Method, erlang_b, erlang_c, erlang_c_reciprocal_minus_one
from .normal import X_MAX, eta, phi, phi_c, xi
from .series import SeriesCoefficients, varphi_eval, varphi_series

__all__ = [name for name in dir() if not name.startswith("_")]
