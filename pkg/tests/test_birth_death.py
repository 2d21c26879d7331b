import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from erlang_regimes.birth_death import BirthDeathSpec, delay_probability_from_pi, steady_state
from erlang_regimes.erlang_a import AbandonmentModel, delay_probability
from erlang_regimes.errors import DomainError, TruncationError
from erlang_regimes.exact import erlang_c


def test_mm1_geometric():
    spec = BirthDeathSpec(arrival=0.5, service=1.0, servers=1)
    st_ = steady_state(spec)
    k = np.arange(st_.truncation + 1)
    assert np.allclose(st_.pi, 0.5 * 0.5**k, rtol=1e-12, atol=1e-300)
    assert delay_probability_from_pi(spec, st_.pi) == pytest.approx(0.5, abs=1e-12)


@given(st.integers(1, 50), st.floats(0.05, 0.97))
def test_matches_erlang_c(n, util):
    rho = util * n
    spec = BirthDeathSpec(arrival=rho, service=1.0, servers=n)
    st_ = steady_state(spec)
    assert st_.tail_mass <= 1e-12
    assert abs(delay_probability_from_pi(spec, st_.pi) - erlang_c(n, rho).value) <= 1e-10


@given(st.integers(1, 50), st.floats(0.2, 2.0), st.floats(0.2, 4), st.floats(0.1, 4))
def test_matches_erlang_a(n, util, mu, theta):
    rho = util * n
    spec = BirthDeathSpec(arrival=rho * mu, service=mu, servers=n, abandonment=theta)
    st_ = steady_state(spec)
    expected = delay_probability(n, rho, AbandonmentModel(mu, theta)).value
    assert abs(delay_probability_from_pi(spec, st_.pi) - expected) <= 1e-8


def test_pi_sums_to_one():
    spec = BirthDeathSpec(arrival=30.0, service=1.0, servers=20, abandonment=0.3)
    assert math.fsum(steady_state(spec).pi) == pytest.approx(1.0, abs=1e-14)


def test_explicit_truncation_too_small_raises():
    spec = BirthDeathSpec(arrival=9.0, service=1.0, servers=10, truncation=12)
    with pytest.raises(TruncationError) as info:
        steady_state(spec)
    assert info.value.estimate > 1e-12


def test_explicit_truncation_used_as_given():
    spec = BirthDeathSpec(arrival=2.0, service=1.0, servers=5, truncation=200)
    assert steady_state(spec).truncation == 200


def test_default_truncation_grows_for_heavy_load():
    spec = BirthDeathSpec(arrival=0.999, service=1.0, servers=1)
    st_ = steady_state(spec)
    assert st_.truncation > spec.default_truncation()
    assert st_.tail_mass <= 1e-12


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(arrival=5.0, service=1.0, servers=5),
        dict(arrival=0.0, service=1.0, servers=5),
        dict(arrival=1.0, service=-1.0, servers=5),
        dict(arrival=1.0, service=1.0, servers=0),
        dict(arrival=1.0, service=1.0, servers=2.5),
        dict(arrival=1.0, service=1.0, servers=2, abandonment=-0.1),
        dict(arrival=1.0, service=1.0, servers=4, truncation=4),
    ],
)
def test_spec_validation(kwargs):
    with pytest.raises(DomainError):
        BirthDeathSpec(**kwargs)


def test_overloaded_with_abandonment_is_fine():
    spec = BirthDeathSpec(arrival=50.0, service=1.0, servers=10, abandonment=2.0)
    p = delay_probability_from_pi(spec, steady_state(spec).pi)
    assert p == pytest.approx(delay_probability(10, 50.0, AbandonmentModel(1.0, 2.0)).value, abs=1e-10)
