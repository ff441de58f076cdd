"""From (level of distribution, M_k lower bound, admissible tuple) to gap statements.

theta is always an exclusive supremum: a level ``theta_sup - eps`` is
available for every eps > 0, never ``theta_sup`` itself.  With
``B = theta_sup * M / 2`` the number of guaranteed primes is the supremum of
``floor(rho + 1)`` over ``rho < B``, which is ceil(B) off the integers and B
itself on them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .asymptotic import AsymptoticRegimeError, mk_asymptotic
from .certify import SCHEMA, MkCertificate, StaleCertificateError, verify_certificate
from .tuples import KNOWN_TUPLES, KTuple, diameter, is_admissible, prime_offset_tuple


class GapError(ValueError):
    pass


class InadmissibleTupleError(GapError):
    pass


class TupleSizeError(GapError):
    pass


class CertificateRejected(GapError):
    pass


def primes_guaranteed(theta_sup, mk_lower) -> int:
    theta_sup = Fraction(theta_sup)
    mk_lower = Fraction(mk_lower)
    if not 0 < theta_sup <= 1:
        raise ValueError("theta_sup must lie in (0, 1]")
    if mk_lower <= 0:
        raise ValueError("mk_lower must be positive")
    B = theta_sup * mk_lower / 2
    # strict inequality: reaching exactly B is never available
    return max(1, math.ceil(B))


@dataclass(frozen=True)
class GapStatement:
    """``liminf (p_{n+m} - p_n) <= gap``."""

    m: int
    gap: int

    def render(self) -> str:
        return f"liminf (p_{{n+{self.m}}} - p_n) <= {self.gap}"


@dataclass(frozen=True)
class GapBound:
    theta_sup: Fraction
    mk_lower: Fraction
    k: int
    tuple: KTuple
    primes_guaranteed: int
    statement: GapStatement
    certificate_ref: str | None = None
    advisory: bool = False

    def to_dict(self) -> dict:
        return {
            "theta_sup": f"{self.theta_sup.numerator}/{self.theta_sup.denominator}",
            "k": self.k,
            "m": self.statement.m,
            "gap": self.statement.gap,
            "primes_guaranteed": self.primes_guaranteed,
            "certificate_ref": self.certificate_ref,
            "advisory_flag": self.advisory,
        }


def gap_bound(theta_sup, cert: MkCertificate, H: KTuple) -> GapBound:
    theta_sup = Fraction(theta_sup)
    if len(H) != cert.k:
        raise TupleSizeError(f"tuple has {len(H)} elements but the certificate is for k={cert.k}")
    adm = is_admissible(H)
    if not adm:
        raise InadmissibleTupleError(f"tuple is not admissible: covers every class mod {adm.prime}")
    if not verify_certificate(cert):
        raise CertificateRejected(f"certificate for k={cert.k} failed verification")
    r = primes_guaranteed(theta_sup, cert.ratio)
    return GapBound(
        theta_sup=theta_sup,
        mk_lower=cert.ratio,
        k=cert.k,
        tuple=H,
        primes_guaranteed=r,
        statement=GapStatement(r - 1, diameter(H)),
        certificate_ref=cert.digest(),
    )


def _tuple_for(k: int) -> KTuple:
    return KNOWN_TUPLES.get(k) or prime_offset_tuple(k)


@dataclass(frozen=True)
class MinKResult:
    k: int
    tuple: KTuple
    gap: int
    advisory: bool
    mk_lower: Fraction


def min_k_for_m(
    m: int,
    theta_sup,
    certified_table: Sequence[tuple[int, object]],
    search_cap: int = 10**12,
) -> MinKResult:
    """Smallest k whose M_k bound guarantees m+1 primes.

    The certified table is consulted first.  Beyond it the advisory
    asymptotic bound is searched by doubling then bisection, which assumes
    the bound is increasing in k over the searched range.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    theta_sup = Fraction(theta_sup)
    ks = [k for k, _ in certified_table]
    if ks != sorted(ks):
        raise ValueError("certified table must be sorted by k")
    best_B = Fraction(0)
    for k, bound in certified_table:
        bound = Fraction(bound)
        best_B = max(best_B, theta_sup * bound / 2)
        if primes_guaranteed(theta_sup, bound) >= m + 1:
            H = _tuple_for(k)
            return MinKResult(k, H, diameter(H), False, bound)

    def ok(k: int) -> bool:
        nonlocal best_B
        try:
            v = Fraction(mk_asymptotic(k))
        except AsymptoticRegimeError:
            return False
        best_B = max(best_B, theta_sup * v / 2)
        return primes_guaranteed(theta_sup, v) >= m + 1

    lo = max(ks[-1] if ks else 1, 16)
    hi = lo
    while not ok(hi):
        lo = hi
        hi *= 2
        if hi > search_cap:
            raise GapError(
                f"no k <= {search_cap} guarantees {m + 1} primes; largest B reached {float(best_B):.6f}"
            )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    H = _tuple_for(hi)
    return MinKResult(hi, H, diameter(H), True, Fraction(mk_asymptotic(hi)))


# --- headline reproduction ---------------------------------------------------

HEADLINE_PLAN = (
    # (theta_sup, k, label); the tuple is the shipped one for that k
    (Fraction(1, 2), 105, "theta -> 1/2 (Bombieri-Vinogradov)"),
    (Fraction(1), 5, "theta -> 1 (Elliott-Halberstam)"),
    (Fraction(1), 105, "theta -> 1 (Elliott-Halberstam)"),
)

CERT_RECIPES = {5: "certify_mk(5, 3, 2) / `sieve-mk certify --k 5 --degree 3 --target 2/1`",
                105: "certify_mk(105, 11, 4) / `sieve-mk certify --k 105 --degree 11 --target 4/1`"}


@dataclass
class HeadlineReport:
    rows: list[GapBound] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    def render_text(self) -> str:
        lines = ["theta_sup  k    r  statement                        certificate"]
        for row in self.rows:
            theta = f"{row.theta_sup}-"
            lines.append(
                f"{theta:<10} {row.k:<4} {row.primes_guaranteed:<2} "
                f"{row.statement.render():<32} {row.certificate_ref[:16]}"
            )
        for err in self.errors:
            lines.append(f"error: {err}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "rows": [r.to_dict() for r in self.rows], "errors": list(self.errors)}

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def reproduce_headline(certificates: Mapping[int, MkCertificate]) -> HeadlineReport:
    """The three bounds 600 / 12 / 600 from the k=105 and k=5 certificates."""
    report = HeadlineReport()
    for theta, k, _label in HEADLINE_PLAN:
        cert = certificates.get(k)
        if cert is None:
            report.errors.append(f"missing k={k} certificate; run {CERT_RECIPES[k]}")
            continue
        try:
            report.rows.append(gap_bound(theta, cert, KNOWN_TUPLES[k]))
        except (GapError, StaleCertificateError) as exc:
            report.errors.append(f"k={k}: {exc}")
    return report
