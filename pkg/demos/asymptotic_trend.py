#!/usr/bin/env python3
"""Watch p(n) approach its closed-form limit 1 / (2 sqrt(pi log n)).

The collision probability decays like 1 / (2 sqrt(pi log n)) - painfully
slowly, through the square root of a logarithm.  The ratio r(n) of the
true value to the limit expression falls toward 1 with a leading
correction of order 1/log n, so even at n = 1e8 it is still ~3% high.
The table below shows the convergence and that (r(n) - 1) * log n levels
off at a near-constant, which is exactly the 1/log n signature.

The Gamma-ratio integrand keeps every row O(1); n = 1e8 costs no more
than n = 100.
"""

import math

from cyclecollide import (
    I_n,
    IntegrandKind,
    QuadratureConfig,
    laplace_I,
    p_asymptotic,
    p_quadrature,
)

config = QuadratureConfig(rel_tol=1e-12)

print(f"{'n':>10}  {'p(n) via integral':>18}  {'limit form':>12}  "
      f"{'r(n)':>8}  {'(r-1)*log n':>11}")
print("-" * 68)
n = 100
while n <= 10**8:
    p = p_quadrature(n, IntegrandKind.GAMMA_RATIO, config)
    pa = p_asymptotic(n)
    r = p / pa
    print(f"{n:>10}  {p:>18.12f}  {pa:>12.8f}  {r:>8.5f}  "
          f"{(r - 1.0) * math.log(n):>11.4f}")
    n *= 10

print()
print("the same slow approach, seen in the kernel integral itself:")
print(f"{'n':>10}  {'I(n)':>14}  {'sqrt(pi/log n)':>15}  {'ratio':>8}")
print("-" * 54)
for n in [10**2, 10**3, 10**4, 10**6, 10**8]:
    val = I_n(n, config).value
    lap = laplace_I(n)
    print(f"{n:>10}  {val:>14.10f}  {lap:>15.10f}  {val / lap:>8.5f}")
