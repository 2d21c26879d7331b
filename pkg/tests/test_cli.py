import pytest
from click.testing import CliRunner

from erlang_regimes.cli import _decimal_grid, cli, fmt


def run(*args):
    return CliRunner().invoke(cli, list(args))


def test_exact_integer():
    res = run("exact", "--n", "2", "--rho", "1.5")
    assert res.exit_code == 0
    assert "B=0.31034482758620" in res.output
    assert "C=0.64285714285714" in res.output
    assert "method=recursion" in res.output


def test_exact_with_abandonment():
    res = run("exact", "--n", "10", "--rho", "9", "--mu", "1", "--theta", "0.5")
    assert res.exit_code == 0
    assert "P=0.4689417044413" in res.output
    assert "scaled_j=" in res.output


def test_exact_mu_without_theta_is_domain_error():
    assert run("exact", "--n", "2", "--rho", "1", "--mu", "2").exit_code == 3


@pytest.mark.parametrize(
    "args",
    [
        ("exact", "--n", "-1", "--rho", "1"),
        ("exact", "--n", "2", "--rho", "0"),
        ("exact", "--n", "2.5", "--rho", "1", "--method", "recursion"),
        ("classify", "--term", "1:1.2"),
        ("sweep", "--target", "finite-c"),
        ("oracle", "--n", "0", "--rho", "1"),
    ],
)
def test_domain_errors_exit_3(args):
    res = run(*args)
    assert res.exit_code == 3
    assert "domain error" in res.output


@pytest.mark.parametrize(
    "args",
    [
        ("exact", "--rho", "1"),
        ("classify", "--term", "garbage"),
        ("sweep", "--z", "1:0:0.1"),
        ("converge", "--term", "1:0.5"),
        ("nonsense",),
    ],
)
def test_usage_errors_exit_2(args):
    assert run(*args).exit_code == 2


def test_truncation_failure_exit_4():
    res = run("oracle", "--n", "10", "--rho", "9", "--truncation", "12")
    assert res.exit_code == 4


def test_classify_output():
    res = run("classify", "--term", "-1:0.5", "--mu", "5", "--theta", "10")
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert "kind=OverloadedTheta" in lines
    assert "z=1" in lines
    assert any(line.startswith("limit_erlang_c=2.90427123") for line in lines)
    assert any(line.startswith("limit_delay_probability=0.7251872661878") for line in lines)


def test_classify_omega():
    res = run("classify", "--term", "-1:0.7")
    assert "kind=OverloadedOmega" in res.output
    assert "limit_erlang_c=inf" in res.output
    assert "z=NA" in res.output


def test_converge_csv():
    res = run("converge", "--term", "1:0.5", "--lambdas", "1e2,1e4")
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "lambda,rho,n,finite_value,limit_value,abs_error"
    assert len(lines) == 3


def test_sweep_default_grid():
    res = run("sweep")
    lines = res.output.strip().splitlines()
    assert lines[0] == "z,value"
    assert len(lines) == 122
    assert lines[1].startswith("-3,")
    assert "0,0.41421356237309" in lines[61]
    assert lines[-1].startswith("3,")


def test_sweep_finite():
    res = run("sweep", "--target", "finite-p", "--z", "-1:1:1", "--lambda", "1e4")
    assert res.exit_code == 0
    assert len(res.output.strip().splitlines()) == 4


def test_oracle_output():
    res = run("oracle", "--n", "5", "--rho", "4", "--theta", "0.5")
    assert res.exit_code == 0
    assert "C formula=" in res.output and "P formula=" in res.output


def test_decimal_grid_is_exact():
    grid = _decimal_grid(None, None, "-0.3:0.3:0.1")
    assert [str(g) for g in grid] == ["-0.3", "-0.2", "-0.1", "0.0", "0.1", "0.2", "0.3"]


def test_fmt():
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(float("inf")) == "inf"
    assert fmt(None) == "NA"
    assert fmt(float("nan")) == "NA"


@pytest.mark.parametrize(
    "args",
    [
        ("exact", "--n", "7.3", "--rho", "6.1", "--mu", "1.5", "--theta", "0.7"),
        ("classify", "--term", "0.5:0.5", "--term", "1:0.2"),
        ("converge", "--term", "-1:0.5", "--lambda-range", "1e2:1e4:3"),
        ("sweep", "--z", "-1:1:0.25"),
        ("oracle", "--n", "8", "--rho", "7", "--theta", "2"),
    ],
)
def test_deterministic(args):
    assert run(*args).output == run(*args).output
