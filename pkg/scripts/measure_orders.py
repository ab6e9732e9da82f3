#!/usr/bin/env python3
"""Measure the empirical decay exponents behind the convergence claims.

For each zero below t = 50 this fits the power-law order of |zeta_hat_n|,
|h_2n|, and the Bernoulli remainder |R_n|, and prints the fitted exponents
next to the nominal ones (-1/2, -3/2, and -(Re z + 1) respectively). The
remainder's measured exponent settles the question of whether it behaves
at its guaranteed order or at the sharper leading-term order.

Usage:
    python scripts/measure_orders.py [--n0 64] [--doublings 10]
"""

import argparse

from zetascope.convergence import (
    ConvergenceSeries,
    Quantity,
    fit_power_law,
    sweep,
)
from zetascope.euler_maclaurin import EulerMaclaurinConfig, remainder
from zetascope.zeros import find_zeros


def remainder_series(rho: complex, ns: list[int], cfg: EulerMaclaurinConfig):
    pts = tuple((n, remainder(rho, n, cfg)) for n in ns)
    return ConvergenceSeries(quantity=Quantity.ZETA_HAT_AT_RHO, rho=rho, points=pts)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n0", type=int, default=64)
    parser.add_argument("--doublings", type=int, default=10)
    args = parser.parse_args()

    cfg = EulerMaclaurinConfig()
    zeros = find_zeros(10, 50, 0.05, cfg)
    ns = [args.n0 * 2**k for k in range(args.doublings + 1)]

    print(f"{'t':>12}  {'|zeta_hat_n| (-0.5)':>20}  {'|h_2n| (-1.5)':>14}  "
          f"{'|R_n| (-1.5)':>13}")
    for zr in zeros:
        e_hat = fit_power_law(
            sweep(Quantity.ZETA_HAT_AT_RHO, zr.rho, args.n0, args.doublings, cfg)
        ).exponent
        e_h2n = fit_power_law(
            sweep(Quantity.SMALL_H_2N, zr.rho, args.n0, args.doublings, cfg)
        ).exponent
        e_rem = fit_power_law(remainder_series(zr.rho, ns, cfg)).exponent
        print(f"{zr.t:12.6f}  {e_hat:20.4f}  {e_h2n:14.4f}  {e_rem:13.4f}")


if __name__ == "__main__":
    main()
