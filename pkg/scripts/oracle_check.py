"""Largest gap between the closed forms and the birth-death chain over a grid."""

import itertools

from erlang_regimes import (
    AbandonmentModel,
    BirthDeathSpec,
    delay_probability,
    delay_probability_from_pi,
    erlang_c,
    steady_state,
)


def main():
    worst_c = worst_p = 0.0
    for n, util in itertools.product(range(1, 51), (0.2, 0.5, 0.8, 0.95)):
        rho = util * n
        spec = BirthDeathSpec(rho, 1.0, n)
        worst_c = max(worst_c, abs(delay_probability_from_pi(spec, steady_state(spec).pi) - erlang_c(n, rho).value))
    for n, ratio, (mu, theta) in itertools.product(
        (2, 5, 10, 20, 35, 50), (0.5, 0.9, 1.0, 1.1, 1.5), ((1.0, 1.0), (2.0, 0.5), (1.0, 4.0))
    ):
        rho = ratio * n
        spec = BirthDeathSpec(rho * mu, mu, n, theta)
        p = delay_probability(n, rho, AbandonmentModel(mu, theta)).value
        worst_p = max(worst_p, abs(delay_probability_from_pi(spec, steady_state(spec).pi) - p))
    print(f"M/M/N   max |C - oracle| = {worst_c:.3g}")
    print(f"M/M/N+M max |P - oracle| = {worst_p:.3g}")


if __name__ == "__main__":
    main()
