"""Exact quadratic forms for I_k(F) and the summed J_k^(m)(F).

F is taken to be a polynomial in ``1 - P_1`` and ``P_2`` restricted to the
simplex, expanded over the basis ``(1 - P_1)^b P_2^c``.  Both functionals are
quadratic in the coefficient vector, so they are stored as two symmetric
rational matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple, Sequence

from .simplex import g_value


class BasisTerm(NamedTuple):
    """The monomial ``(1 - P_1)^b * P_2^c``."""

    b: int
    c: int


def basis_terms(degree: int) -> list[BasisTerm]:
    """All terms with ``b + 2c <= degree``, ordered by ``(c, b)``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return [BasisTerm(b, c) for c in range(degree // 2 + 1) for b in range(degree - 2 * c + 1)]


@dataclass(frozen=True)
class SymmetricPoly:
    """A rational combination of basis terms, i.e. a symmetric polynomial P."""

    terms: tuple[tuple[Fraction, BasisTerm], ...]

    def __post_init__(self):
        seen = [t for _, t in self.terms]
        if len(set(seen)) != len(seen):
            raise ValueError("basis terms must be distinct")

    @classmethod
    def from_dict(cls, coeffs: Mapping[tuple[int, int], object]) -> SymmetricPoly:
        return cls(tuple((Fraction(v), BasisTerm(*bc)) for bc, v in coeffs.items()))

    def scaled(self, factor) -> SymmetricPoly:
        return SymmetricPoly(tuple((Fraction(factor) * a, t) for a, t in self.terms))

    def max_degree(self) -> int:
        return max((t.b + 2 * t.c for _, t in self.terms), default=0)

    def coefficient_vector(self, basis: Sequence[BasisTerm]) -> list[Fraction]:
        index = {t: i for i, t in enumerate(basis)}
        vec = [Fraction(0)] * len(basis)
        for a, t in self.terms:
            if t not in index:
                raise ValueError(f"term {tuple(t)} is not in the basis")
            vec[index[t]] += a
        return vec

    def __call__(self, point: Iterable[float]) -> float:
        """Evaluate F at a point; F vanishes off the simplex."""
        xs = list(point)
        p1 = sum(xs)
        if p1 > 1 or any(x < 0 for x in xs):
            return 0.0
        p2 = sum(x * x for x in xs)
        return sum(float(a) * (1 - p1) ** t.b * p2 ** t.c for a, t in self.terms)


def i_entry(k: int, s: BasisTerm, t: BasisTerm) -> Fraction:
    """Coefficient of ``a_s a_t`` in I_k(F)."""
    if k < 1:
        raise ValueError("k must be positive")
    b = s.b + t.b
    c = s.c + t.c
    return factorial(b) * g_value(c, 2, k) / factorial(k + b + 2 * c)


def _gamma(bs: int, bt: int, cs: int, ct: int, c1: int, c2: int) -> Fraction:
    num = (
        factorial(bs)
        * factorial(bt)
        * factorial(2 * cs - 2 * c1)
        * factorial(2 * ct - 2 * c2)
        * factorial(bs + bt + 2 * cs + 2 * ct - 2 * c1 - 2 * c2 + 2)
    )
    den = factorial(bs + 2 * cs - 2 * c1 + 1) * factorial(bt + 2 * ct - 2 * c2 + 1)
    return Fraction(num, den)


def j_entry(k: int, s: BasisTerm, t: BasisTerm) -> Fraction:
    """Coefficient of ``a_s a_t`` in J_k^(1)(F) (the same for every m by symmetry)."""
    if k < 1:
        raise ValueError("k must be positive")
    total = Fraction(0)
    for c1 in range(s.c + 1):
        for c2 in range(t.c + 1):
            total += (
                comb(s.c, c1)
                * comb(t.c, c2)
                * _gamma(s.b, t.b, s.c, t.c, c1, c2)
                * g_value(c1 + c2, 2, k - 1)
            )
    return total / factorial(k + s.b + t.b + 2 * s.c + 2 * t.c + 1)


@dataclass(frozen=True)
class FormPair:
    """M1 is the I_k form and M2 the k * J_k^(1) form over ``basis``."""

    k: int
    basis: tuple[BasisTerm, ...]
    M1: tuple[tuple[Fraction, ...], ...]
    M2: tuple[tuple[Fraction, ...], ...]

    @property
    def degree(self) -> int:
        return max((t.b + 2 * t.c for t in self.basis), default=0)

    def __len__(self) -> int:
        return len(self.basis)


def assemble_forms(k: int, degree: int) -> FormPair:
    if k < 2:
        raise ValueError("assemble_forms needs k >= 2")
    basis = tuple(basis_terms(degree))
    n = len(basis)
    m1 = [[Fraction(0)] * n for _ in range(n)]
    m2 = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m1[i][j] = m1[j][i] = i_entry(k, basis[i], basis[j])
            m2[i][j] = m2[j][i] = k * j_entry(k, basis[i], basis[j])
    return FormPair(k, basis, tuple(map(tuple, m1)), tuple(map(tuple, m2)))


def quadratic_form(M: Sequence[Sequence[Fraction]], a: Sequence[Fraction]) -> Fraction:
    # a^T M a using symmetry: diagonal once, off-diagonal twice
    n = len(a)
    total = Fraction(0)
    for i in range(n):
        if not a[i]:
            continue
        row = M[i]
        acc = row[i] * a[i]
        for j in range(i + 1, n):
            if a[j]:
                acc += 2 * row[j] * a[j]
        total += a[i] * acc
    return total


def evaluate_ratio(forms: FormPair, a: Sequence) -> Fraction:
    """Exact Rayleigh quotient ``a^T M2 a / a^T M1 a``."""
    if len(a) != len(forms.basis):
        raise ValueError(f"vector has length {len(a)}, basis has {len(forms.basis)}")
    a = [Fraction(x) for x in a]
    if not any(a):
        raise ValueError("degenerate coefficient vector")
    denom = quadratic_form(forms.M1, a)
    assert denom > 0, "M1 must be positive definite"
    return quadratic_form(forms.M2, a) / denom


def ldl_pivots(M: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Pivots of exact symmetric Gaussian elimination; all positive iff M is positive definite."""
    A = [list(map(Fraction, row)) for row in M]
    n = len(A)
    pivots = []
    for p in range(n):
        piv = A[p][p]
        pivots.append(piv)
        if piv <= 0:
            break
        for i in range(p + 1, n):
            f = A[i][p] / piv
            if f:
                for j in range(p + 1, n):
                    A[i][j] -= f * A[p][j]
    return pivots


def is_positive_definite(M: Sequence[Sequence[Fraction]]) -> bool:
    pivots = ldl_pivots(M)
    return len(pivots) == len(M) and all(p > 0 for p in pivots)
