"""Certified lower bounds for M_k from the largest generalized eigenvalue.

The float eigen-solve only proposes a coefficient vector.  The evidence is the
exact rational Rayleigh quotient of a rationalized copy of that vector, which
is a lower bound for M_k whatever the quality of the float computation.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .forms import BasisTerm, FormPair, assemble_forms, basis_terms, evaluate_ratio

SCHEMA = "sieve-mk/1"

DEFAULT_ITERATIONS = 10_000
DEFAULT_TOLERANCE = 1e-12
DEFAULT_MAX_DENOMINATOR = 10**12
# working precision (decimal digits) for the Cholesky reduction of the pencil
REDUCTION_DPS = 50


class CertificationError(RuntimeError):
    """No rationalized eigenvector beat the target."""

    def __init__(self, message: str, eigenvalue: float | None = None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class ConvergenceError(RuntimeError):
    """The eigen-iteration hit its cap; carries the last iterate."""

    def __init__(self, message: str, eigenvalue: float, vector: list[float]):
        super().__init__(message)
        self.eigenvalue = eigenvalue
        self.vector = vector


class StaleCertificateError(ValueError):
    pass


# --- float eigen-solve ------------------------------------------------------


def _mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def _reduce(forms: FormPair):
    """Symmetric-definite reduction of the pencil (M2, M1).

    Returns ``(C, back, scales)``.  C = L^-1 S M2 S L^-T is an ordinary
    symmetric float matrix with the same spectrum, where S = diag(scales),
    ``scales[i] = 1/sqrt(M1_ii)`` and L L^T = S M1 S.  ``back(y)`` maps an
    eigenvector of C to one of the scaled pencil.
    """
    n = len(forms.basis)
    with mpmath.workdps(REDUCTION_DPS):
        diag = [mpmath.sqrt(_mpf(forms.M1[i][i])) for i in range(n)]
        A = mpmath.matrix(n, n)
        B = mpmath.matrix(n, n)
        for i in range(n):
            for j in range(n):
                A[i, j] = _mpf(forms.M1[i][j]) / (diag[i] * diag[j])
                B[i, j] = _mpf(forms.M2[i][j]) / (diag[i] * diag[j])
        L = mpmath.cholesky(A)
        Linv = mpmath.inverse(L)
        C = Linv * B * Linv.T
        C_float = np.array([[float(C[i, j]) for j in range(n)] for i in range(n)])
        Linv_T = Linv.T

    def back(y: np.ndarray) -> list[float]:
        with mpmath.workdps(REDUCTION_DPS):
            z = Linv_T * mpmath.matrix([float(v) for v in y])
            return [float(z[i]) for i in range(n)]

    scales = [float(1 / d) for d in diag]
    return 0.5 * (C_float + C_float.T), back, scales


def _normalize_max(v: Sequence[float]) -> list[float]:
    i = int(np.argmax(np.abs(v)))
    return [float(x / v[i]) for x in v]


def _top_eigenpair_scaled(
    forms: FormPair, iterations: int, tolerance: float
) -> tuple[float, list[float], list[float]]:
    """Largest eigenpair in scaled coordinates; also returns the scale factors."""
    C, back, scales = _reduce(forms)
    n = C.shape[0]
    w, V = np.linalg.eigh(C)
    y = V[:, -1]
    rq = float(y @ C @ y)
    # Rayleigh quotient iteration from the dense-solver guess
    converged = n == 1
    for _ in range(iterations):
        if converged:
            break
        try:
            x = np.linalg.solve(C - rq * np.eye(n), y)
        except np.linalg.LinAlgError:
            converged = True
            break
        nx = np.linalg.norm(x)
        if not np.isfinite(nx) or nx == 0:
            converged = True
            break
        y_new = x / nx
        rq_new = float(y_new @ C @ y_new)
        if rq_new < rq - 1e3 * tolerance * max(1.0, abs(rq)):
            # drifted towards a lower eigenvalue; keep the dense-solver pair
            converged = True
            break
        done = abs(rq_new - rq) < tolerance
        y, rq = y_new, rq_new
        if done:
            converged = True
    z = back(y)
    if not converged:
        raise ConvergenceError(
            f"no convergence after {iterations} iterations", rq, _normalize_max(z)
        )
    return rq, _normalize_max(z), scales


def max_generalized_eigenpair(
    forms: FormPair,
    iterations: int = DEFAULT_ITERATIONS,
    tolerance: float = DEFAULT_TOLERANCE,
) -> tuple[float, list[float]]:
    """Largest lambda with ``M2 a = lambda M1 a`` and its eigenvector.

    The vector is in the original basis coordinates and is normalized so its
    largest-magnitude entry is 1.
    """
    lam, z, scales = _top_eigenpair_scaled(forms, iterations, tolerance)
    return lam, _normalize_max([zi * s for zi, s in zip(z, scales)])


# --- rationalization and certificates ----------------------------------------


def rationalize_vector(v: Sequence[float], max_denominator: int) -> list[Fraction]:
    """Componentwise best rational approximation with bounded denominator."""
    if not any(v):
        raise ValueError("cannot rationalize the zero vector")
    out = [Fraction(x).limit_denominator(max_denominator) for x in v]
    if not any(out):
        raise ValueError("every component rounded to zero; increase max_denominator")
    return out


def _rational_scale(x: float) -> Fraction:
    # 17 significant digits; exactness of the scale is irrelevant to soundness
    return Fraction(Decimal(f"{x:.16e}"))


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


@dataclass(frozen=True)
class MkCertificate:
    k: int
    degree: int
    basis: tuple[BasisTerm, ...]
    vector: tuple[Fraction, ...]
    ratio: Fraction
    target: Fraction
    float_eigenvalue_hint: str = ""

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "k": self.k,
            "degree": self.degree,
            "basis": [[t.b, t.c] for t in self.basis],
            "vector": [_fmt(x) for x in self.vector],
            "ratio": _fmt(self.ratio),
            "target": _fmt(self.target),
            "float_eigenvalue_hint": self.float_eigenvalue_hint,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> MkCertificate:
        if data.get("schema", SCHEMA) != SCHEMA:
            raise StaleCertificateError(f"unknown schema {data.get('schema')!r}")
        return cls(
            k=int(data["k"]),
            degree=int(data["degree"]),
            basis=tuple(BasisTerm(int(b), int(c)) for b, c in data["basis"]),
            vector=tuple(parse_rational(x) for x in data["vector"]),
            ratio=parse_rational(data["ratio"]),
            target=parse_rational(data["target"]),
            float_eigenvalue_hint=str(data.get("float_eigenvalue_hint", "")),
        )

    @classmethod
    def from_json(cls, text: str) -> MkCertificate:
        return cls.from_dict(json.loads(text))

    def digest(self) -> str:
        """SHA-256 of the canonical JSON encoding."""
        return hashlib.sha256(self.to_json().encode()).hexdigest()


def certify_mk(
    k: int,
    degree: int,
    target,
    *,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
    iterations: int = DEFAULT_ITERATIONS,
    tolerance: float = DEFAULT_TOLERANCE,
    forms: FormPair | None = None,
) -> MkCertificate:
    """Build an exact certificate that M_k exceeds ``target``.

    Denominators for the rationalized eigenvector double from 1000 up to
    ``max_denominator``; the first vector whose exact quotient beats the
    target wins.
    """
    if k < 2:
        raise ValueError("certify_mk needs k >= 2")
    target = Fraction(target)
    forms = forms or assemble_forms(k, degree)
    try:
        lam, z, scales = _top_eigenpair_scaled(forms, iterations, tolerance)
    except ConvergenceError as exc:
        # the last iterate is still a candidate; soundness comes from the exact check
        lam, z = exc.eigenvalue, exc.vector
        _, _, scales = _reduce(forms)
    hint = f"{lam:.10f}"
    ref = max(scales)
    rscales = [_rational_scale(s / ref) for s in scales]
    best = None
    den = 1000
    while True:
        den_now = min(den, max_denominator)
        q = rationalize_vector(z, den_now)
        vec = tuple(qi * si for qi, si in zip(q, rscales))
        ratio = evaluate_ratio(forms, vec)
        best = ratio if best is None else max(best, ratio)
        if ratio > target:
            return MkCertificate(k, degree, tuple(forms.basis), vec, ratio, target, hint)
        if den_now >= max_denominator:
            break
        den *= 2
    raise CertificationError(
        f"certification failed at degree {degree}: float eigenvalue {hint}, "
        f"best exact ratio {best} ~ {float(best):.10f}, target {target}",
        eigenvalue=lam,
    )


def verify_certificate(cert: MkCertificate) -> bool:
    """Recompute the forms and the exact ratio from scratch."""
    expected = tuple(basis_terms(cert.degree))
    if tuple(cert.basis) != expected:
        raise StaleCertificateError("stale certificate format: basis does not match")
    if len(cert.vector) != len(expected):
        raise StaleCertificateError("stale certificate format: vector length mismatch")
    if cert.k < 2 or not any(cert.vector):
        return False
    ratio = evaluate_ratio(assemble_forms(cert.k, cert.degree), cert.vector)
    return ratio == cert.ratio and ratio > cert.target


def certificate_from_poly(k: int, degree: int, poly, target) -> MkCertificate:
    """Certificate built from an explicitly given polynomial rather than an eigenvector."""
    forms = assemble_forms(k, degree)
    vec = tuple(poly.coefficient_vector(forms.basis))
    ratio = evaluate_ratio(forms, vec)
    target = Fraction(target)
    if not ratio > target:
        raise CertificationError(f"quotient {ratio} does not exceed {target}")
    return MkCertificate(k, degree, tuple(forms.basis), vec, ratio, target, f"{float(ratio):.10f}")
