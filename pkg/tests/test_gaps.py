import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sieve_mk.gaps import (
    CertificateRejected,
    GapError,
    InadmissibleTupleError,
    TupleSizeError,
    gap_bound,
    min_k_for_m,
    primes_guaranteed,
    reproduce_headline,
)
from sieve_mk.tuples import H5, KTuple, builtin_h105, prime_offset_tuple


def sup_floor_oracle(B: Fraction, qmax: int) -> int:
    """max over rho = B - 1/q, q = 2..qmax, of floor(rho + 1), integer arithmetic only."""
    best = None
    n, d = B.numerator, B.denominator
    for q in range(2, qmax + 1):
        # rho + 1 = (n q - d + d q) / (d q)
        v = (n * q - d + d * q) // (d * q)
        best = v if best is None else max(best, v)
    return max(best, 1)


@pytest.mark.parametrize(
    "theta, mk",
    [
        (Fraction(1, 2), Fraction(40018, 10000)),
        (Fraction(1), Fraction(40018, 10000)),
        (Fraction(1), Fraction(4)),
        (Fraction(1), Fraction(2)),
        (Fraction(1, 3), Fraction(7, 5)),
        (Fraction(9, 10), Fraction(123, 10)),
    ],
)
def test_primes_guaranteed_against_rho_grid(theta, mk):
    assert primes_guaranteed(theta, mk) == sup_floor_oracle(theta * mk / 2, 10**6)


def test_primes_guaranteed_examples(cert105):
    assert primes_guaranteed(Fraction(1, 2), cert105.ratio) == 2
    assert primes_guaranteed(1, cert105.ratio) == 3
    assert primes_guaranteed(1, 4) == 2
    with pytest.raises(ValueError):
        primes_guaranteed(0, 4)
    with pytest.raises(ValueError):
        primes_guaranteed(Fraction(1, 2), -1)


pos = st.fractions(min_value=Fraction(1, 100), max_value=20, max_denominator=1000)
theta_st = st.fractions(min_value=Fraction(1, 100), max_value=1, max_denominator=1000)


@given(theta_st, theta_st, pos, pos)
def test_primes_guaranteed_monotone(t1, t2, m1, m2):
    t1, t2 = sorted((t1, t2))
    m1, m2 = sorted((m1, m2))
    assert primes_guaranteed(t1, m1) <= primes_guaranteed(t2, m1) <= primes_guaranteed(t2, m2)


def test_gap_bound_examples(cert105, cert5):
    gb = gap_bound(Fraction(1, 2), cert105, builtin_h105())
    assert (gb.statement.m, gb.statement.gap, gb.primes_guaranteed) == (1, 600, 2)
    gb = gap_bound(1, cert5, H5)
    assert (gb.statement.m, gb.statement.gap) == (1, 12)
    gb = gap_bound(1, cert105, builtin_h105())
    assert (gb.statement.m, gb.statement.gap) == (2, 600)
    assert gb.certificate_ref == cert105.digest()


def test_gap_bound_errors(cert5):
    with pytest.raises(TupleSizeError):
        gap_bound(1, cert5, KTuple((0, 2, 6)))
    with pytest.raises(InadmissibleTupleError):
        gap_bound(1, cert5, KTuple((0, 2, 4, 6, 8)))
    bad = dataclasses.replace(cert5, target=Fraction(3))
    with pytest.raises(CertificateRejected):
        gap_bound(1, bad, H5)


def test_min_k_for_m(cert105, cert5):
    res = min_k_for_m(1, Fraction(1, 2), [(105, cert105.ratio)])
    assert (res.k, res.gap, res.advisory) == (105, 600, False)
    res = min_k_for_m(1, 1, [(5, cert5.ratio), (105, cert105.ratio)])
    assert (res.k, res.gap, res.tuple) == (5, 12, H5)
    with pytest.raises(ValueError):
        min_k_for_m(0, 1, [])


def test_min_k_for_m_extends_with_advisory_bound(cert105):
    res = min_k_for_m(2, Fraction(1, 2), [(105, cert105.ratio)])
    assert res.advisory
    assert res.mk_lower / 4 > 2
    assert res.tuple == prime_offset_tuple(res.k)
    with pytest.raises(GapError, match="largest B"):
        min_k_for_m(6, Fraction(1, 2), [(105, cert105.ratio)], search_cap=10**6)


def test_headline(cert105, cert5):
    report = reproduce_headline({105: cert105, 5: cert5})
    assert not report.errors
    rows = [(r.theta_sup, r.statement.m, r.statement.gap, r.primes_guaranteed) for r in report.rows]
    assert rows == [(Fraction(1, 2), 1, 600, 2), (Fraction(1), 1, 12, 2), (Fraction(1), 2, 600, 3)]
    assert report.render_text() == reproduce_headline({105: cert105, 5: cert5}).render_text()


def test_headline_partial(cert5):
    report = reproduce_headline({5: cert5})
    assert len(report.rows) == 1 and report.rows[0].statement.gap == 12
    assert len(report.errors) == 2
    assert all("certify_mk(105, 11, 4)" in e for e in report.errors)
