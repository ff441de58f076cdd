"""Certified lower bounds M_5 > 2 and M_105 > 4.

The eigen-solve is floating point; the claim rests only on the exact
Rayleigh quotient of the rational vector stored in the certificate.

Run: python3 demos/02_certify_mk.py
"""

import time
from fractions import Fraction

from sieve_mk import certify_mk, verify_certificate
from sieve_mk.certify import certificate_from_poly
from sieve_mk.forms import SymmetricPoly

# a hand-picked polynomial at k=5
P = SymmetricPoly.from_dict({(1, 1): 1, (2, 0): Fraction(7, 10), (0, 1): Fraction(1, 14), (1, 0): Fraction(-3, 14)})
cert = certificate_from_poly(5, 3, P, 2)
print(f"k=5 hand-picked polynomial: ratio {cert.ratio} ~ {float(cert.ratio):.6f}")

for k, degree, target in [(5, 3, 2), (50, 8, 3), (105, 11, 4)]:
    t0 = time.perf_counter()
    cert = certify_mk(k, degree, target)
    dt = time.perf_counter() - t0
    print(
        f"k={k:<4} degree {degree:<2} basis {len(cert.basis):<3} "
        f"eigenvalue hint {cert.float_eigenvalue_hint}  exact ratio ~ {float(cert.ratio):.10f} "
        f"> {target}  [{dt:.2f}s]"
    )
    assert verify_certificate(cert)

print()
print("denominators in the k=105 certificate vector:")
print("  largest", max(v.denominator for v in cert.vector))
print("  digest ", cert.digest())
