"""Limiting delay probability of the M/M/N+M queue against z, with finite-size points.

    python scripts/delay_limit_curve.py --mu 5 --theta 10 --lam 1e3 --lam 1e5 > curve.csv

Columns: z, limit, then one finite-system column per --lam (staffing
N = rho - z sqrt(rho)).
"""

import argparse
import math

import numpy as np

from erlang_regimes import AbandonmentModel, delay_limit_at, delay_probability


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu", type=float, default=5.0)
    ap.add_argument("--theta", type=float, default=10.0)
    ap.add_argument("--lam", type=float, action="append", default=[])
    ap.add_argument("--zmax", type=float, default=3.0)
    ap.add_argument("--points", type=int, default=121)
    args = ap.parse_args()

    m = AbandonmentModel(args.mu, args.theta)
    print(",".join(["z", "limit"] + [f"finite_lambda={lam:g}" for lam in args.lam]))
    for z in np.linspace(-args.zmax, args.zmax, args.points):
        row = [z, delay_limit_at(z, m)]
        for lam in args.lam:
            rho = lam / args.mu
            n = rho - z * math.sqrt(rho)
            row.append(delay_probability(n, rho, m).value if n > 0 else math.nan)
        print(",".join(f"{v:.10g}" for v in row))


if __name__ == "__main__":
    main()
