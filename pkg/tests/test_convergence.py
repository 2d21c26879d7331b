import math

import pytest

from erlang_regimes.asymptotics import StaffingRule
from erlang_regimes.convergence import QueueModel, Target, run_convergence_study
from erlang_regimes.errors import DomainError


def test_theta_rule_error_shrinks():
    rows = run_convergence_study(StaffingRule.square_root(1.0), QueueModel(), [1e6, 1e2, 1e4])
    assert [r.lam for r in rows] == [1e2, 1e4, 1e6]
    assert all(r.ok for r in rows)
    errs = [r.abs_error for r in rows]
    assert errs[0] > errs[1] > errs[2]
    assert rows[0].limit_value == pytest.approx(0.22336127479826074, rel=1e-12)


def test_delay_target_uses_abandonment_model():
    model = QueueModel(5.0, 10.0)
    rows = run_convergence_study(StaffingRule(), model, [1e3, 1e5], Target.DELAY_PROBABILITY)
    assert rows[-1].limit_value == pytest.approx(1 / (1 + math.sqrt(2)), rel=1e-15)
    assert rows[-1].abs_error < 2e-2


def test_delay_target_requires_theta():
    with pytest.raises(DomainError):
        run_convergence_study(StaffingRule(), QueueModel(), [1e3], "delay-probability")


def test_infinite_limit_reports_infinite_gap():
    rows = run_convergence_study(StaffingRule(((-1.0, 0.7),)), QueueModel(), [1e3, 1e4])
    assert all(math.isinf(r.limit_value) and math.isinf(r.abs_error) for r in rows)
    assert rows[0].finite_value < rows[1].finite_value


def test_failed_row_is_kept():
    # N = rho - 5 sqrt(rho) is negative at rho = 4
    rows = run_convergence_study(StaffingRule.square_root(-5.0), QueueModel(), [4.0, 1e4])
    assert not rows[0].ok
    assert math.isnan(rows[0].finite_value) and math.isnan(rows[0].abs_error)
    assert rows[1].ok


def test_round_n_staffs_integers():
    rows = run_convergence_study(StaffingRule.square_root(0.5), QueueModel(), [1e3], round_n=True)
    assert rows[0].n == round(1e3 + 0.5 * math.sqrt(1e3))


def test_lambda_validation():
    with pytest.raises(DomainError):
        run_convergence_study(StaffingRule(), QueueModel(), [0.0])
    with pytest.raises(DomainError):
        QueueModel(service_rate=-1.0)
    with pytest.raises(DomainError):
        QueueModel(abandonment_rate=0.0)


def test_offered_load():
    assert QueueModel(4.0, arrival_rate=10.0).offered_load() == 2.5
    assert QueueModel(4.0).offered_load(20.0) == 5.0
