"""Desk-scale sieve: weights, the lambda <-> y change of variables, S1 and S2.

Everything that is an identity (the transforms, the rearranged sums) is
computed with exact rationals so that the two sides can be compared with
``==``.  The only floating-point step is evaluating F at ``log r / log R``,
whose values are snapped to rationals with denominator 2**48 before use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping

from .arith import count_in_class, crt_pair, factorize, primes_up_to, primorial, totient
from .forms import BasisTerm, SymmetricPoly, i_entry, j_entry
from .tuples import KTuple, is_admissible

SNAP = 2**48
PAIR_BUDGET = 10**8

Key = tuple[int, ...]


class SieveBudgetError(ValueError):
    pass


class InadmissibleError(ValueError):
    pass


ONE = SymmetricPoly.from_dict({(0, 0): 1})


@dataclass(frozen=True)
class SieveConfig:
    k: int
    H: KTuple
    N: int
    D0: int
    W: int
    v0: int
    R: int
    F: SymmetricPoly = ONE

    def __post_init__(self):
        if len(self.H) != self.k:
            raise ValueError("|H| must equal k")
        if self.R < 2:
            raise ValueError("R must be at least 2")
        if any(math.gcd(self.v0 + h, self.W) != 1 for h in self.H):
            raise ValueError("v0 + h_i must be coprime to W for every i")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "H": list(self.H),
            "N": self.N,
            "D0": self.D0,
            "W": self.W,
            "v0": self.v0,
            "R": self.R,
            "F": [[str(a), t.b, t.c] for a, t in self.F.terms],
        }


def setup(
    k: int,
    H,
    N: int,
    D0: int = 5,
    R_exponent: float | None = None,
    *,
    R: int | None = None,
    F: SymmetricPoly = ONE,
) -> SieveConfig:
    """Fix W, the residue v0 and the support cut R.

    v0 is the least residue mod W with every ``v0 + h_i`` coprime to W; it
    exists by the Chinese remainder theorem because H is admissible.
    """
    H = H if isinstance(H, KTuple) else KTuple.from_iterable(H)
    if len(H) != k:
        raise ValueError(f"|H| = {len(H)} but k = {k}")
    adm = is_admissible(H)
    if not adm:
        raise InadmissibleError(f"H is not admissible: covers every class mod {adm.prime}")
    if D0 < 2:
        raise ValueError("D0 must be at least 2")
    W = primorial(D0)
    if N <= W * W:
        raise ValueError(f"need N > W^2 = {W * W}")
    if R is None:
        if R_exponent is None:
            raise ValueError("give R or R_exponent")
        R = math.floor(N**R_exponent)
    # allowed residues per prime combine to a full CRT product; scanning
    # [0, W) in order picks its least member directly
    v0 = next(v for v in range(W) if all(math.gcd(v + h, W) == 1 for h in H))
    return SieveConfig(k, H, N, D0, W, v0, R, F)


# --- support ------------------------------------------------------------------


@lru_cache(maxsize=None)
def support(k: int, R: int, W: int) -> tuple[Key, ...]:
    """All (d_1..d_k) with prod d_i squarefree, coprime to W and below R."""
    out: list[Key] = []
    for n in range(1, R):
        if math.gcd(n, W) != 1:
            continue
        f = factorize(n) if n > 1 else {}
        if any(e > 1 for e in f.values()):
            continue
        primes = sorted(f)
        for slots in product(range(k), repeat=len(primes)):
            d = [1] * k
            for p, s in zip(primes, slots):
                d[s] *= p
            out.append(tuple(d))
    return tuple(sorted(out))


def divisor_keys(key: Key) -> Iterator[Key]:
    """All tuples e with e_i | key_i (keys are squarefree)."""
    per_slot = []
    for d in key:
        ps = sorted(factorize(d)) if d > 1 else []
        divs = [1]
        for p in ps:
            divs += [x * p for x in divs]
        per_slot.append(divs)
    return product(*per_slot)


def _mu_prod(key: Key) -> int:
    # every slot is squarefree on the support
    return (-1) ** sum(len(factorize(d)) for d in key if d > 1)


def _phi_prod(key: Key) -> int:
    return math.prod(totient(d) for d in key)


def _g_prod(key: Key) -> int:
    return math.prod(p - 2 for d in key if d > 1 for p in factorize(d))


@dataclass(frozen=True)
class WeightTable:
    """Sieve weights lambda_d on the squarefree, W-coprime, below-R support."""

    k: int
    R: int
    W: int
    entries: Mapping[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        allowed = set(support(self.k, self.R, self.W))
        bad = [d for d in self.entries if d not in allowed]
        if bad:
            raise ValueError(f"entries off the support: {bad[:3]}")
        clean = {d: Fraction(v) for d, v in self.entries.items() if v}
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: Key) -> Fraction:
        return self.entries.get(tuple(key), Fraction(0))


@dataclass(frozen=True)
class YTable:
    """The y (``m is None``) or y^(m) variables, same support as the weights."""

    k: int
    R: int
    W: int
    entries: Mapping[Key, Fraction] = field(default_factory=dict)
    m: int | None = None

    def __post_init__(self):
        allowed = set(support(self.k, self.R, self.W))
        bad = [d for d in self.entries if d not in allowed]
        if bad:
            raise ValueError(f"entries off the support: {bad[:3]}")
        clean = {d: Fraction(v) for d, v in self.entries.items() if v}
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: Key) -> Fraction:
        return self.entries.get(tuple(key), Fraction(0))


def _check_budget(n_support: int, budget: int = PAIR_BUDGET) -> None:
    if n_support * n_support > budget:
        raise SieveBudgetError(
            f"{n_support} support tuples give {n_support**2} pairs (> {budget}); use a smaller R"
        )


def snap(x: float) -> Fraction:
    return Fraction(round(x * SNAP), SNAP)


def weights_from_F(cfg: SieveConfig, budget: int = PAIR_BUDGET) -> WeightTable:
    keys = support(cfg.k, cfg.R, cfg.W)
    _check_budget(len(keys), budget)
    logR = math.log(cfg.R)
    acc: dict[Key, Fraction] = {}
    for r in keys:
        val = snap(cfg.F([math.log(ri) / logR for ri in r]))
        if not val:
            continue
        w = val / _phi_prod(r)
        for d in divisor_keys(r):
            acc[d] = acc.get(d, Fraction(0)) + w
    entries = {d: _mu_prod(d) * math.prod(d) * v for d, v in acc.items()}
    return WeightTable(cfg.k, cfg.R, cfg.W, entries)


def y_from_lambda(tbl: WeightTable) -> YTable:
    acc: dict[Key, Fraction] = {}
    for d, lam in tbl.entries.items():
        w = lam / math.prod(d)
        for r in divisor_keys(d):
            acc[r] = acc.get(r, Fraction(0)) + w
    entries = {r: _mu_prod(r) * _phi_prod(r) * v for r, v in acc.items()}
    return YTable(tbl.k, tbl.R, tbl.W, entries)


def lambda_from_y(ytbl: YTable) -> WeightTable:
    if ytbl.m is not None:
        raise ValueError("lambda_from_y inverts the plain y transform, not y^(m)")
    acc: dict[Key, Fraction] = {}
    for r, y in ytbl.entries.items():
        w = y / _phi_prod(r)
        for d in divisor_keys(r):
            acc[d] = acc.get(d, Fraction(0)) + w
    entries = {d: _mu_prod(d) * math.prod(d) * v for d, v in acc.items()}
    return WeightTable(ytbl.k, ytbl.R, ytbl.W, entries)


def ym_from_lambda(tbl: WeightTable, m: int) -> YTable:
    """The y^(m) transform with g(p) = p - 2; ``m`` is 1-based."""
    if not 1 <= m <= tbl.k:
        raise ValueError(f"m must lie in 1..{tbl.k}")
    acc: dict[Key, Fraction] = {}
    for d, lam in tbl.entries.items():
        if d[m - 1] != 1:
            continue
        assert all(di % 2 for di in d), "support must be odd (W even) for g(p) = p - 2"
        w = lam / _phi_prod(d)
        for r in divisor_keys(d):
            acc[r] = acc.get(r, Fraction(0)) + w
    entries = {r: _mu_prod(r) * _g_prod(r) * v for r, v in acc.items()}
    return YTable(tbl.k, tbl.R, tbl.W, entries, m=m)


# --- S1 and S2 ----------------------------------------------------------------


def _progression(cfg: SieveConfig) -> range:
    first = cfg.N + (cfg.v0 - cfg.N) % cfg.W
    return range(first, 2 * cfg.N, cfg.W)


def _inner(cfg: SieveConfig, tbl: WeightTable, n: int) -> Fraction:
    total = Fraction(0)
    for d, lam in tbl.entries.items():
        if all((n + h) % di == 0 for h, di in zip(cfg.H, d)):
            total += lam
    return total


@lru_cache(maxsize=8)
def _prime_flags(limit: int) -> bytearray:
    flags = bytearray(limit + 1)
    for p in primes_up_to(limit):
        flags[p] = 1
    return flags


def _pair_class(cfg: SieveConfig, d: Key, e: Key) -> tuple[int, int] | None:
    """Residue class of n with n = v0 (W) and [d_i, e_i] | n + h_i for all i."""
    cls = (cfg.v0 % cfg.W, cfg.W)
    for h, di, ei in zip(cfg.H, d, e):
        q = math.lcm(di, ei)
        cls = crt_pair(cls[0], cls[1], (-h) % q, q)
        if cls is None:
            return None
    return cls


def s1(cfg: SieveConfig, tbl: WeightTable, mode: str = "direct") -> Fraction:
    if mode == "direct":
        return sum((_inner(cfg, tbl, n) ** 2 for n in _progression(cfg)), Fraction(0))
    if mode == "pairsum":
        items = sorted(tbl.entries.items())
        _check_budget(len(items))
        total = Fraction(0)
        for d, ld in items:
            for e, le in items:
                cls = _pair_class(cfg, d, e)
                if cls is not None:
                    total += ld * le * count_in_class(cfg.N, 2 * cfg.N, cls[0], cls[1])
        return total
    raise ValueError(f"unknown mode {mode!r}")


def s2(cfg: SieveConfig, tbl: WeightTable, m: int, mode: str = "direct") -> Fraction:
    """S_2^(m): the S1 sum restricted to n with n + h_m prime (``m`` 1-based)."""
    if not 1 <= m <= cfg.k:
        raise ValueError(f"m must lie in 1..{cfg.k}")
    h_m = cfg.H.elements[m - 1]
    flags = _prime_flags(2 * cfg.N + max(cfg.H))
    if mode == "direct":
        return sum(
            (_inner(cfg, tbl, n) ** 2 for n in _progression(cfg) if flags[n + h_m]),
            Fraction(0),
        )
    if mode == "pairsum":
        # d_m > 1 forces d_m | n + h_m with d_m < R <= N < n + h_m: never prime
        assert cfg.R <= cfg.N
        items = sorted((d, v) for d, v in tbl.entries.items() if d[m - 1] == 1)
        _check_budget(len(items))
        total = Fraction(0)
        for d, ld in items:
            for e, le in items:
                cls = _pair_class(cfg, d, e)
                if cls is None:
                    continue
                first = cfg.N + (cls[0] - cfg.N) % cls[1]
                count = sum(flags[n + h_m] for n in range(first, 2 * cfg.N, cls[1]))
                total += ld * le * count
        return total
    raise ValueError(f"unknown mode {mode!r}")


def functional_values(k: int, F: SymmetricPoly) -> tuple[Fraction, Fraction]:
    """Exact (I_k(F), sum_m J_k^(m)(F)) for F in the (1-P_1)^b P_2^c basis."""
    I = Fraction(0)
    J = Fraction(0)
    for a, s in F.terms:
        for b, t in F.terms:
            I += a * b * i_entry(k, BasisTerm(*s), BasisTerm(*t))
            J += a * b * j_entry(k, BasisTerm(*s), BasisTerm(*t))
    return I, k * J


def main_term_prediction(cfg: SieveConfig) -> tuple[float, float]:
    """Leading-order S1 and S2 (summed over m) from the asymptotic formulas."""
    I, J = functional_values(cfg.k, cfg.F)
    logR = math.log(cfg.R)
    base = totient(cfg.W) ** cfg.k * cfg.N * logR**cfg.k / cfg.W ** (cfg.k + 1)
    return base * float(I), base * logR / math.log(cfg.N) * float(J)


def simulate(cfg: SieveConfig) -> dict:
    """Every sum both ways, plus the main-term predictions."""
    tbl = weights_from_F(cfg)
    s1d, s1p = s1(cfg, tbl, "direct"), s1(cfg, tbl, "pairsum")
    s2d = [s2(cfg, tbl, m, "direct") for m in range(1, cfg.k + 1)]
    s2p = [s2(cfg, tbl, m, "pairsum") for m in range(1, cfg.k + 1)]
    p1, p2 = main_term_prediction(cfg)
    fmt = lambda q: f"{q.numerator}/{q.denominator}"  # noqa: E731
    return {
        "config": cfg.to_dict(),
        "S1_direct": fmt(s1d),
        "S1_pairsum": fmt(s1p),
        "S2_direct": [fmt(x) for x in s2d],
        "S2_pairsum": [fmt(x) for x in s2p],
        "S1_pred": p1,
        "S2_pred": p2,
        "ratios": {
            "S1_direct/S1_pred": float(s1d) / p1 if p1 else None,
            "S2_direct/S2_pred": float(sum(s2d)) / p2 if p2 else None,
            "S2/S1": float(sum(s2d) / s1d) if s1d else None,
        },
        "identities_hold": s1d == s1p and s2d == s2p,
        "advisory": True,
    }
