"""The advisory large-k bound for M_k next to log k.

Run: python3 demos/03_asymptotic_bound.py
"""

import math

from sieve_mk.asymptotic import default_A, mk_asymptotic, ratio_lower_bound

print(f"{'k':>8} {'log k':>8} {'floor':>8} {'at default A':>13} {'grid max':>9}")
for e in range(4, 11):
    k = 10**e
    floor = math.log(k) - 2 * math.log(math.log(k)) - 2
    at_default = ratio_lower_bound(k, default_A(k))
    shown = at_default if isinstance(at_default, str) else f"{at_default:.4f}"
    print(f"{'1e%d' % e:>8} {math.log(k):8.3f} {floor:8.3f} {shown:>13} {mk_asymptotic(k):9.4f}")

# below k = 16 the bound is not offered at all
try:
    mk_asymptotic(10)
except ValueError as exc:
    print("\nk=10:", exc)
