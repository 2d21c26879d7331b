"""Finite Erlang-C values against their limits along five staffing rules.

    python scripts/convergence_table.py [--max-exp 6]
"""

import argparse

import numpy as np

from erlang_regimes import QueueModel, StaffingRule, classify, run_convergence_study

RULES = {
    "N = rho + rho^0.7": StaffingRule(((1.0, 0.7),)),
    "N = rho + sqrt(rho)": StaffingRule.square_root(1.0),
    "N = rho + rho^0.3": StaffingRule(((1.0, 0.3),)),
    "N = rho - sqrt(rho)": StaffingRule.square_root(-1.0),
    "N = rho - rho^0.7": StaffingRule(((-1.0, 0.7),)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-exp", type=int, default=6)
    args = ap.parse_args()
    lambdas = np.logspace(2, args.max_exp, 2 * (args.max_exp - 2) + 1)

    for name, rule in RULES.items():
        regime = classify(rule)
        print(f"\n{name}   [{regime.kind.value}]")
        print(f"{'lambda':>10} {'N':>14} {'C':>14} {'limit':>12} {'|C - limit|':>12}")
        for r in run_convergence_study(rule, QueueModel(), lambdas):
            print(f"{r.lam:>10.3g} {r.n:>14.6f} {r.finite_value:>14.6g} {r.limit_value:>12.6g} {r.abs_error:>12.3g}")


if __name__ == "__main__":
    main()
