"""Admissible tuples: checking, prime-offset construction, greedy refinement.

Run: python3 demos/04_tuples.py
"""

from sieve_mk.tuples import builtin_h105, diameter, is_admissible, prime_offset_tuple, refine_admissible

for H in ([0, 2, 4], [0, 2, 6, 8, 12], [0, 4, 6, 10, 12, 16]):
    adm = is_admissible(H)
    verdict = "admissible" if adm else f"blocked mod {adm.prime} (residues {list(adm.residues)})"
    print(f"{str(H):<24} {verdict}")

h = builtin_h105()
print(f"\nshipped 105-tuple: diameter {diameter(h)}, admissible={bool(is_admissible(h))}")

print("\nprime-offset tuples versus the shipped one")
for k in (5, 50, 105, 300):
    H = prime_offset_tuple(k)
    print(f"  k={k:<4} diameter {diameter(H)}")

# refinement of an interval: what survives sieving out one class per prime <= 10
survivors = refine_admissible(range(0, 200), 10)
print(f"\n{len(survivors)} of 200 integers survive refinement for k=10; first ten: {survivors[:10]}")
assert is_admissible(survivors[:10])
