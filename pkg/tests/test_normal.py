import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from erlang_regimes.errors import DomainError
from erlang_regimes.normal import X_MAX, eta, phi, phi_c, xi, xi_prime

mpmath.mp.dps = 40


def mp_phi_c(x):
    return mpmath.erfc(mpmath.mpf(x) / mpmath.sqrt(2)) / 2


def mp_xi(x):
    x = mpmath.mpf(x)
    return x * mp_phi_c(x) / mpmath.npdf(x)


def test_phi_examples():
    assert phi(0) == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-15)
    assert phi(1) == pytest.approx(0.24197072451914337, rel=1e-15)
    assert phi(-1) == phi(1)


def test_phi_c_examples():
    assert phi_c(0) == 0.5
    assert phi_c(1) == pytest.approx(0.15865525393145705, rel=1e-15)
    assert phi_c(-1) == pytest.approx(0.84134474606854293, rel=1e-15)


@pytest.mark.parametrize("x", np.linspace(-30, 30, 241))
def test_phi_c_relative_accuracy(x):
    ref = mp_phi_c(x)
    assert abs(phi_c(x) - ref) / ref <= 1e-14


def test_xi_examples():
    assert xi(0) == 0.0
    assert xi(1) == pytest.approx(0.65567954241879847, rel=1e-14)
    assert xi(-1) == pytest.approx(-3.4770518117036944, rel=1e-14)


@pytest.mark.parametrize("x", np.linspace(-30, 30, 121))
def test_xi_accuracy_contract(x):
    tol = 1e-12 if abs(x) <= 8 else 1e-9
    ref = mp_xi(x)
    if ref == 0:
        assert xi(x) == 0.0
    else:
        assert abs(xi(x) - ref) / abs(ref) <= tol


def test_xi_rejects_out_of_range():
    with pytest.raises(DomainError, match="working range"):
        xi(X_MAX + 0.5)
    with pytest.raises(DomainError):
        xi(float("nan"))


def test_eta_examples():
    # composed from the mpmath normal tail and density
    assert eta(0) == 0.5
    assert eta(2) == pytest.approx(0.0057687267145199321, rel=1e-12)
    assert eta(-2) == pytest.approx(4.9942312732854801, rel=1e-14)


finite_x = st.floats(-X_MAX, X_MAX, allow_nan=False)


@given(finite_x, finite_x)
def test_xi_strictly_increasing(a, b):
    if a == b:
        return
    lo, hi = min(a, b), max(a, b)
    if hi - lo < 1e-9:
        return
    assert xi(lo) < xi(hi)


@given(finite_x)
def test_xi_below_one(x):
    assert xi(x) < 1.0


@given(st.floats(-38, 38, allow_nan=False))
def test_symmetry(x):
    assert phi(-x) == phi(x)
    assert abs(phi_c(x) + phi_c(-x) - 1.0) <= 1e-15


def test_eta_positive_on_dense_grid():
    assert all(eta(x) > 0 for x in np.linspace(-30, 30, 20001))


@pytest.mark.parametrize("x", np.linspace(-5, 5, 41))
def test_xi_derivative_matches_eta_over_phi(x):
    h = 1e-5
    fd = (xi(x + h) - xi(x - h)) / (2 * h)
    closed = eta(x) / phi(x)
    assert fd == pytest.approx(closed, rel=1e-6)
    assert xi_prime(x) == pytest.approx(closed, rel=1e-9)
