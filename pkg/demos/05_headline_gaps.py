"""From certificates to gap statements: 600, 12 and 600.

Run: python3 demos/05_headline_gaps.py
"""

from fractions import Fraction

from sieve_mk import certify_mk
from sieve_mk.gaps import min_k_for_m, primes_guaranteed, reproduce_headline

certs = {5: certify_mk(5, 3, 2), 105: certify_mk(105, 11, 4)}
print(reproduce_headline(certs).render_text())

# the boundary: an integer value of theta*M/2 is never reached
for theta, mk in [(Fraction(1), Fraction(4)), (Fraction(1), certs[105].ratio), (Fraction(1, 2), certs[105].ratio)]:
    print(f"theta -> {theta}-, M = {float(mk):.6f}: {primes_guaranteed(theta, mk)} primes")

print()
table = [(5, certs[5].ratio), (105, certs[105].ratio)]
for m in (1, 2, 3):
    res = min_k_for_m(m, Fraction(1), table)
    tag = "advisory" if res.advisory else "certified"
    print(f"m={m}: k={res.k}, gap <= {res.gap}  [{tag}]")
