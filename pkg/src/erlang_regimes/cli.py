"""Command-line interface: ``erlang-regimes {exact,classify,converge,sweep,oracle}``.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 numerical failure.
Numbers are printed with 17 significant digits; CSV goes to stdout and
diagnostics to stderr.
"""

import functools
import math
import sys
from decimal import Decimal, InvalidOperation

import click
import numpy as np

from .asymptotics import (
    StaffingRule,
    classify,
    delay_limit_at,
    erlang_c_limit_at,
    limit_delay_probability,
    limit_erlang_c,
)
from .birth_death import BirthDeathSpec, delay_probability_from_pi, steady_state
from .convergence import QueueModel, Target, run_convergence_study
from .erlang_a import AbandonmentModel, delay_probability, j_integral, state_probabilities
from .errors import DomainError, NumericalError
from .exact import Method, erlang_b, erlang_c

EXIT_DOMAIN = 3
EXIT_NUMERIC = 4


def fmt(x):
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "NA"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(float(x), ".17g")


def _guard(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DomainError as exc:
            click.echo(f"domain error: {exc}", err=True)
            sys.exit(EXIT_DOMAIN)
        except NumericalError as exc:
            click.echo(f"numerical error: {exc}", err=True)
            sys.exit(EXIT_NUMERIC)

    return wrapper


def _positive(flag, value):
    if value is not None and not (math.isfinite(value) and value > 0):
        raise DomainError(f"{flag} must be a positive finite number, got {value!r}")
    return value


def _parse_terms(ctx, param, values):
    terms = []
    for raw in values:
        try:
            c, alpha = raw.split(":")
            terms.append((float(c), float(alpha)))
        except ValueError:
            raise click.BadParameter(f"expected COEFFICIENT:EXPONENT, got {raw!r}", ctx, param) from None
    return tuple(terms)


def _rule(flag_terms):
    try:
        return StaffingRule(flag_terms)
    except DomainError as exc:
        raise DomainError(f"--term: {exc}") from None


def _model(mu, theta):
    _positive("--mu", mu)
    _positive("--theta", theta)
    return AbandonmentModel(mu, theta)


def _decimal_grid(ctx, param, raw):
    try:
        start, stop, step = (Decimal(p) for p in raw.split(":"))
    except (ValueError, InvalidOperation):
        raise click.BadParameter(f"expected START:STOP:STEP, got {raw!r}", ctx, param) from None
    if step <= 0:
        raise click.BadParameter("step must be positive", ctx, param)
    if start > stop:
        raise click.BadParameter("start must not exceed stop", ctx, param)
    count = int((stop - start) / step) + 1
    return [start + i * step for i in range(count)]


def _decimal_str(d):
    s = format(d.normalize(), "f")
    return "0" if s in ("-0", "0") else s


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Erlang-B/C, Erlang-A and their many-server limiting regimes."""


@cli.command()
@click.option("--n", "n", type=float, required=True, help="Number of servers (real allowed).")
@click.option("--rho", type=float, required=True, help="Offered load lambda/mu.")
@click.option("--mu", type=float, default=None, help="Service rate (Erlang-A; default 1).")
@click.option("--theta", type=float, default=None, help="Abandonment rate; enables Erlang-A output.")
@click.option("--method", type=click.Choice([m.value for m in Method]), default=None)
@click.option("--round-n", is_flag=True, help="Round N to the nearest integer first.")
@_guard
def exact(n, rho, mu, theta, method, round_n):
    """Point values of B, C and (with --theta) the Erlang-A measures."""
    _positive("--n", n)
    _positive("--rho", rho)
    if round_n:
        n = float(round(n))
        _positive("--n (rounded)", n)
    method = Method(method) if method else None
    click.echo(f"n={fmt(n)}")
    click.echo(f"rho={fmt(rho)}")
    b_method = method if method in (None, Method.RECURSION, Method.DIRECT_SUM, Method.QUADRATURE_A) else None
    b = erlang_b(n, rho, b_method)
    click.echo(f"B={fmt(b.value)} method={b.method.value} est_abs_error={fmt(b.est_abs_error)}")
    c = erlang_c(n, rho, method)
    click.echo(f"C={fmt(c.value)} method={c.method.value} est_abs_error={fmt(c.est_abs_error)}")
    if theta is not None or mu is not None:
        if theta is None:
            raise DomainError("--theta is required for Erlang-A output")
        m = _model(1.0 if mu is None else mu, theta)
        p = delay_probability(n, rho, m)
        click.echo(f"mu={fmt(m.mu)}")
        click.echo(f"theta={fmt(m.theta)}")
        click.echo(f"P={fmt(p.value)}")
        click.echo(f"J={fmt(j_integral(n, rho, m))}")
        click.echo(f"scaled_j={fmt(p.scaled_j)}")
        click.echo(f"c_recip_minus_one={fmt(p.c_recip_minus_one)}")


_term_option = click.option(
    "--term",
    "terms",
    multiple=True,
    callback=_parse_terms,
    metavar="C:ALPHA",
    help="Staffing term c*rho^alpha (repeatable); N = rho + sum of terms.",
)


@cli.command("classify")
@_term_option
@click.option("--mu", type=float, default=None, help="Service rate; with --theta adds the Erlang-A limit.")
@click.option("--theta", type=float, default=None)
@_guard
def classify_cmd(terms, mu, theta):
    """Regime of a staffing rule and its limiting values."""
    rule = _rule(terms)
    m = _model(1.0 if mu is None else mu, theta) if theta is not None else None
    regime = classify(rule, m)
    lim = limit_erlang_c(regime)
    click.echo(f"rule={rule}")
    click.echo(f"kind={regime.kind.value}")
    click.echo(f"z={fmt(regime.z)}")
    click.echo(f"limit_erlang_c={fmt(lim.value)} form={lim.closed_form.value} expr={lim.expression}")
    if m is not None:
        pl = limit_delay_probability(regime, m)
        click.echo(f"z_hat={fmt(regime.z_hat)}")
        click.echo(f"limit_delay_probability={fmt(pl.value)} form={pl.closed_form.value} expr={pl.expression}")


@cli.command()
@_term_option
@click.option("--mu", type=float, default=1.0, show_default=True)
@click.option("--theta", type=float, default=None, help="Required for --target delay-probability.")
@click.option("--lambdas", default=None, help="Comma-separated arrival rates, e.g. 1e2,1e4,1e6.")
@click.option("--lambda-range", default=None, metavar="START:STOP:COUNT", help="Geometric grid of arrival rates.")
@click.option("--target", type=click.Choice([t.value for t in Target]), default=Target.ERLANG_C.value)
@click.option("--round-n", is_flag=True, help="Staff round(N) servers instead of real N.")
@_guard
def converge(terms, mu, theta, lambdas, lambda_range, target, round_n):
    """CSV of finite-system values against the limit along a rule."""
    lams = []
    try:
        if lambdas:
            lams += [float(x) for x in lambdas.split(",") if x.strip()]
        if lambda_range:
            start, stop, count = lambda_range.split(":")
            lams += list(np.geomspace(float(start), float(stop), int(count)))
    except ValueError:
        raise click.UsageError("could not parse --lambdas / --lambda-range") from None
    if not lams:
        raise click.UsageError("give --lambdas or --lambda-range")
    for x in lams:
        _positive("--lambdas", x)
    _positive("--mu", mu)
    _positive("--theta", theta)
    rule = _rule(terms)
    model = QueueModel(mu, theta)
    rows = run_convergence_study(rule, model, lams, Target(target), round_n=round_n)
    click.echo("lambda,rho,n,finite_value,limit_value,abs_error")
    for r in rows:
        if not r.ok:
            click.echo(f"lambda={fmt(r.lam)}: {r.error}", err=True)
        click.echo(",".join(fmt(v) for v in (r.lam, r.rho, r.n, r.finite_value, r.limit_value, r.abs_error)))


SWEEP_TARGETS = ("delay-limit", "erlang-c-limit", "finite-c", "finite-p")


@cli.command()
@click.option("--target", type=click.Choice(SWEEP_TARGETS), default="delay-limit", show_default=True)
@click.option("--z", "z_grid", default="-3:3:0.05", show_default=True, callback=_decimal_grid, metavar="START:STOP:STEP")
@click.option("--mu", type=float, default=5.0, show_default=True)
@click.option("--theta", type=float, default=10.0, show_default=True)
@click.option("--lambda", "lam", type=float, default=None, help="Arrival rate for the finite-* targets.")
@_guard
def sweep(target, z_grid, mu, theta, lam):
    """CSV ``z,value`` of a limit curve or of finite values along N = rho - z sqrt(rho)."""
    m = _model(mu, theta)
    if target.startswith("finite"):
        if lam is None:
            raise DomainError("--lambda is required for finite-* targets")
        _positive("--lambda", lam)
    click.echo("z,value")
    for zd in z_grid:
        z = float(zd)
        if target == "delay-limit":
            value = delay_limit_at(z, m)
        elif target == "erlang-c-limit":
            value = erlang_c_limit_at(z)
        else:
            rho = lam / mu
            n = rho - z * math.sqrt(rho)
            if not n > 0:
                raise DomainError(f"--z {zd}: N = rho - z sqrt(rho) = {n:g} is not positive")
            value = erlang_c(n, rho).value if target == "finite-c" else delay_probability(n, rho, m).value
        click.echo(f"{_decimal_str(zd)},{fmt(value)}")


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Integer number of servers.")
@click.option("--rho", type=float, required=True)
@click.option("--mu", type=float, default=1.0, show_default=True)
@click.option("--theta", type=float, default=None, help="Abandonment rate (M/M/N+M comparison).")
@click.option("--truncation", type=int, default=None, help="State cap K for the birth-death chain.")
@_guard
def oracle(n, rho, mu, theta, truncation):
    """Compare formula values against the birth-death stationary solution."""
    if n < 1:
        raise DomainError(f"--n must be a positive integer, got {n}")
    _positive("--rho", rho)
    _positive("--mu", mu)
    _positive("--theta", theta)
    lam = rho * mu
    click.echo(f"n={n}")
    click.echo(f"rho={fmt(rho)}")
    if rho < n:
        spec = BirthDeathSpec(lam, mu, n, 0.0, truncation)
        st = steady_state(spec)
        c = erlang_c(n, rho).value
        o = delay_probability_from_pi(spec, st.pi)
        click.echo(f"C formula={fmt(c)} oracle={fmt(o)} abs_diff={fmt(abs(c - o))} K={st.truncation}")
    else:
        click.echo("C oracle=NA (M/M/N chain is unstable for rho >= n)")
    if theta is not None:
        m = AbandonmentModel(mu, theta)
        spec = BirthDeathSpec(lam, mu, n, theta, truncation)
        st = steady_state(spec)
        p = delay_probability(n, rho, m).value
        o = delay_probability_from_pi(spec, st.pi)
        click.echo(f"P formula={fmt(p)} oracle={fmt(o)} abs_diff={fmt(abs(p - o))} K={st.truncation}")
        pf = state_probabilities(n, rho, m)
        po = st.pi[:n]
        click.echo(
            f"p_sum formula={fmt(math.fsum(pf))} oracle={fmt(math.fsum(po))} "
            f"max_abs_diff={fmt(float(np.max(np.abs(pf - po))))}"
        )


def main(argv=None):
    cli.main(args=argv, prog_name="erlang-regimes")


if __name__ == "__main__":
    main()
