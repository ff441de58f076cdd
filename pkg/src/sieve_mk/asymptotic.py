"""Closed-form lower bound for M_k at large k.

Uses the product weight ``F(t) = prod g(k t_i)`` with ``g(u) = 1/(1 + A u)`` on
``[0, T]`` and ``1 + A T = e^A``.  Values are double-precision and advisory:
nothing here is a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

INAPPLICABLE = "inapplicable"


class AsymptoticRegimeError(ValueError):
    pass


@dataclass(frozen=True)
class LargeKParams:
    k: int
    A: float
    T: float
    mu: float
    gamma: float
    int_g: float

    @classmethod
    def build(cls, k: int, A: float) -> LargeKParams:
        int_g, gamma, _ = g_integral_triple(A)
        return cls(k, A, support_length(A), center_of_mass(A), gamma, int_g)

    @property
    def guard_holds(self) -> bool:
        return self.mu < 1 - self.T / self.k


def support_length(A: float) -> float:
    """T with 1 + A T = e^A."""
    return math.expm1(A) / A


def g_integral_triple(A: float) -> tuple[float, float, float]:
    """(int g, int g^2, int u g^2) over [0, T] for g = 1/(1 + A u)."""
    if A <= 0:
        raise ValueError("A must be positive")
    em = math.exp(-A)
    # log(1 + A T) = A, so the first integral is exactly 1
    return 1.0, -math.expm1(-A) / A, (A - 1 + em) / A**2


def center_of_mass(A: float) -> float:
    """mu = int u g^2 / int g^2 = 1/(1 - e^-A) - 1/A."""
    if A <= 0:
        raise ValueError("A must be positive")
    if A < 1e-4:
        # series 1/2 + A/12 - A^3/720 avoids cancellation
        return 0.5 + A / 12 - A**3 / 720
    return -1 / math.expm1(-A) - 1 / A


def default_A(k: int) -> float:
    return math.log(k) - 2 * math.log(math.log(k))


def ratio_lower_bound(k: int, A: float) -> float | str:
    """``A (1 - A e^A / (k (1 - A/(e^A - 1) - e^A/k)^2))`` or ``"inapplicable"``."""
    if k < 2 or A <= 0:
        return INAPPLICABLE
    params = LargeKParams.build(k, A)
    if not params.guard_holds:
        return INAPPLICABLE
    eA = math.exp(A)
    inner = 1 - A / math.expm1(A) - eA / k
    if inner <= 0:
        return INAPPLICABLE
    bracket = 1 - A * eA / (k * inner**2)
    if bracket <= 0:
        return INAPPLICABLE
    value = A * bracket
    assert value <= A
    return value


def mk_asymptotic(k: int) -> float:
    """Best advisory bound over a grid of A within 25% of log k - 2 log log k."""
    if k < 16:
        raise AsymptoticRegimeError("k below asymptotic regime; use eigen-certify")
    a0 = default_A(k)
    if a0 <= 0:
        raise AsymptoticRegimeError("k below asymptotic regime; use eigen-certify")
    best = ratio_lower_bound(k, a0)
    for A in np.linspace(0.75 * a0, 1.25 * a0, 101):
        v = ratio_lower_bound(k, float(A))
        if v == INAPPLICABLE:
            continue
        if best == INAPPLICABLE or v > best:
            best = v
    if best == INAPPLICABLE:
        raise AsymptoticRegimeError("k below asymptotic regime; use eigen-certify")
    return best
