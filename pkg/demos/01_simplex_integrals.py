"""Closed-form integrals over the simplex, checked against a midpoint grid.

Run: python3 demos/01_simplex_integrals.py
"""

from fractions import Fraction

import numpy as np

from sieve_mk.simplex import g_poly, moment_integral, monomial_integral


def grid_estimate(k, exps, n=400):
    # crude 2D midpoint rule, only for k = 2
    assert k == 2
    h = 1.0 / n
    xs = (np.arange(n) + 0.5) * h
    X, Y = np.meshgrid(xs, xs)
    inside = X + Y <= 1
    vals = (1 - X - Y) ** exps[0] * X ** exps[1] * Y ** exps[2]
    return float(np.sum(vals[inside]) * h * h)


print("monomial integrals at k=2")
for a, e1, e2 in [(0, 0, 0), (1, 1, 0), (2, 1, 1), (0, 3, 2)]:
    exact = monomial_integral(2, a, [e1, e2])
    print(f"  (1-P1)^{a} t1^{e1} t2^{e2}:  {str(exact):>10}  grid ~ {grid_estimate(2, (a, e1, e2)):.6f}")

print()
print("G_{b,2}(x) polynomials; G_{b,2}(k) enters the P_2 moments")
for b in range(4):
    print(f"  b={b}: coefficients {[str(c) for c in g_poly(b, 2).coeffs]}")

print()
print("moment integrals (1-P1)^a P2^b over R_k")
for k in (2, 5, 105):
    row = [moment_integral(k, a, b, 2) for a, b in [(0, 0), (2, 0), (0, 1), (1, 2)]]
    print(f"  k={k:<4}", "  ".join(f"{float(v):.3e}" for v in row))

# volume of R_k is 1/k!
assert moment_integral(6, 0, 0, 2) == Fraction(1, 720)
