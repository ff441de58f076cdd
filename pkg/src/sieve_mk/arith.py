"""Small exact number-theory helpers shared by the tuple and sieve modules."""

from __future__ import annotations

from bisect import bisect_right
from math import gcd, isqrt, prod


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a sieve of Eratosthenes."""
    if n < 2:
        return []
    flags = bytearray(b"\x01") * (n + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, f in enumerate(flags) if f]


class PrimeTable:
    """Growable list of primes; extends its sieve bound on demand."""

    def __init__(self, bound: int = 1024):
        self.bound = max(bound, 16)
        self.primes = primes_up_to(self.bound)

    def _grow(self, bound: int) -> None:
        while self.bound < bound:
            self.bound *= 2
        self.primes = primes_up_to(self.bound)

    def up_to(self, n: int) -> list[int]:
        if n > self.bound:
            self._grow(n)
        return self.primes[: bisect_right(self.primes, n)]

    def nth(self, n: int) -> int:
        """The n-th prime, 1-indexed (nth(1) == 2)."""
        if n < 1:
            raise ValueError("prime index starts at 1")
        while len(self.primes) < n:
            self._grow(2 * self.bound)
        return self.primes[n - 1]

    def pi(self, x: int) -> int:
        return len(self.up_to(x))


PRIMES = PrimeTable()


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale arguments only)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())


def primorial(bound: int) -> int:
    """Product of all primes <= bound."""
    return prod(PRIMES.up_to(bound))


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Combine x = r1 (m1), x = r2 (m2); None when the congruences clash.

    Moduli need not be coprime.
    """
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    lcm = m1 // g * m2
    if m1 == 1:
        return r2 % m2, m2
    t = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g) if m2 // g > 1 else 0
    return (r1 + m1 * t) % lcm, lcm


def count_in_class(lo: int, hi: int, residue: int, modulus: int) -> int:
    """Number of n with lo <= n < hi and n = residue (mod modulus)."""
    if hi <= lo:
        return 0
    first = lo + (residue - lo) % modulus
    if first >= hi:
        return 0
    return (hi - 1 - first) // modulus + 1
