"""Exact integrals of power-sum polynomials over the simplex.

The simplex is ``R_k = {t in [0, 1]^k : t_1 + ... + t_k <= 1}``.  Everything
here returns :class:`fractions.Fraction` values; no floating point is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial with rational coefficients, ``coeffs[i]`` multiplies x**i."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        # the zero polynomial gets degree -1
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__


def binomial_poly(r: int) -> UniPoly:
    """``C(x, r) = x (x-1) ... (x-r+1) / r!`` as an exact polynomial in x."""
    p = UniPoly((Fraction(1),))
    for i in range(r):
        p = p * UniPoly((Fraction(-i), Fraction(1)))
    return p * Fraction(1, factorial(r))


def _compositions(b: int, r: int) -> Iterator[tuple[int, ...]]:
    """Compositions of b into r positive parts, lexicographic order."""
    if r == 1:
        if b >= 1:
            yield (b,)
        return
    for first in range(1, b - r + 2):
        for rest in _compositions(b - first, r - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _composition_weight(b: int, r: int, j: int) -> int:
    # sum over compositions of prod (j*b_i)!/b_i!; every factor is an integer
    return sum(
        prod(factorial(j * part) // factorial(part) for part in comp)
        for comp in _compositions(b, r)
    )


@lru_cache(maxsize=None)
def g_poly(b: int, j: int) -> UniPoly:
    """The polynomial ``G_{b,j}`` giving the integral of ``(1-P_1)^a P_j^b``.

    ``G_{b,j}(x) = b! * sum_{r=1}^{b} C(x, r) * sum_{b_1+...+b_r=b, b_i>=1} prod (j b_i)!/b_i!``
    with the convention ``G_{0,j} = 1``.
    """
    if b < 0 or j < 1:
        raise ValueError("g_poly needs b >= 0 and j >= 1")
    if b == 0:
        return UniPoly((Fraction(1),))
    total = UniPoly(())
    for r in range(1, b + 1):
        total = total + binomial_poly(r) * _composition_weight(b, r, j)
    return total * factorial(b)


@lru_cache(maxsize=None)
def g_value(b: int, j: int, x: int) -> Fraction:
    """``G_{b,j}(x)`` at an integer point, exact."""
    return g_poly(b, j)(x)


def monomial_integral(k: int, a: int, exponents: Sequence[int]) -> Fraction:
    """Integral over R_k of ``(1 - sum t_i)^a * prod t_i^{a_i}``."""
    if k < 1:
        raise ValueError("k must be positive")
    if len(exponents) != k:
        raise ValueError(f"expected {k} exponents, got {len(exponents)}")
    if a < 0 or any(e < 0 for e in exponents):
        raise ValueError("exponents must be non-negative")
    num = factorial(a) * prod(factorial(e) for e in exponents)
    return Fraction(num, factorial(k + a + sum(exponents)))


def moment_integral(k: int, a: int, b: int, j: int) -> Fraction:
    """Integral over R_k of ``(1 - P_1)^a * P_j^b`` where ``P_j = sum t_i^j``."""
    if k < 1:
        raise ValueError("k must be positive")
    return factorial(a) * g_value(b, j, k) / factorial(k + j * b + a)
