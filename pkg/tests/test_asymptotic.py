import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sieve_mk.asymptotic import (
    INAPPLICABLE,
    AsymptoticRegimeError,
    LargeKParams,
    center_of_mass,
    default_A,
    g_integral_triple,
    mk_asymptotic,
    ratio_lower_bound,
    support_length,
)


def quad_triple(A):
    """Numerical quadrature of g, g^2, u g^2 on [0, T], 50 digits."""
    with mpmath.workdps(50):
        A = mpmath.mpf(A)
        T = (mpmath.e**A - 1) / A
        g = lambda u: 1 / (1 + A * u)  # noqa: E731
        return (
            mpmath.quad(g, [0, T]),
            mpmath.quad(lambda u: g(u) ** 2, [0, T]),
            mpmath.quad(lambda u: u * g(u) ** 2, [0, T]),
        )


@pytest.mark.parametrize("A", [0.3, 1.0, math.log(2), 4.0, 6.626])
def test_integral_triple_against_quadrature(A):
    got = g_integral_triple(A)
    ref = quad_triple(A)
    for x, y in zip(got, ref):
        assert x == pytest.approx(float(y), rel=1e-12)


def test_integral_triple_examples():
    int_g, gamma, int_ug2 = g_integral_triple(1.0)
    assert int_g == 1.0
    assert gamma == pytest.approx(0.632121, abs=1e-6)
    assert int_ug2 == pytest.approx(0.367879, abs=1e-6)
    assert g_integral_triple(math.log(2))[1] == pytest.approx(1 / (2 * math.log(2)), rel=1e-14)
    assert g_integral_triple(math.log(2))[1] == pytest.approx(0.721348, abs=1e-6)


@given(st.floats(0.01, 30))
def test_int_g_is_one(A):
    assert g_integral_triple(A)[0] == 1.0


@pytest.mark.parametrize("A", [1.0, 6.626, 0.05, 12.0])
def test_center_of_mass_against_quadrature(A):
    _, gamma, ug2 = quad_triple(A)
    assert center_of_mass(A) == pytest.approx(float(ug2 / gamma), rel=1e-12)


def test_center_of_mass_values():
    assert center_of_mass(1.0) == pytest.approx(0.581977, abs=1e-6)
    # 0.8504066 from the closed form and from quadrature
    assert center_of_mass(6.626) == pytest.approx(0.8504066, abs=1e-6)
    assert abs(center_of_mass(1e-6) - 0.5) < 1e-5


def test_params_bundle():
    p = LargeKParams.build(10**5, 6.0)
    assert p.T == pytest.approx(support_length(6.0))
    assert p.guard_holds


def test_ratio_lower_bound_k1e5():
    A = default_A(10**5)
    assert A == pytest.approx(6.626, abs=1e-3)
    v = ratio_lower_bound(10**5, A)
    assert v == pytest.approx(6.2837, abs=1e-3)
    assert v > A - 2


def test_ratio_lower_bound_guard():
    assert ratio_lower_bound(2, 5.0) == INAPPLICABLE
    assert ratio_lower_bound(10**4, 0.0) == INAPPLICABLE
    v = ratio_lower_bound(10**4, default_A(10**4))
    assert v > default_A(10**4) - 2 > 0


@given(st.integers(2, 10**9), st.floats(0.01, 25))
def test_ratio_bound_below_A_and_guard(k, A):
    v = ratio_lower_bound(k, A)
    if v != INAPPLICABLE:
        assert 0 < v <= A
        assert center_of_mass(A) < 1 - support_length(A) / k


@pytest.mark.parametrize("k", [10**4, 10**5, 10**6, 10**7])
def test_mk_asymptotic_beats_log_floor(k):
    assert mk_asymptotic(k) > math.log(k) - 2 * math.log(math.log(k)) - 2


def test_mk_asymptotic_values():
    assert mk_asymptotic(10**5) >= 6.28
    big = 10**10
    ref = math.log(big) - 2 * math.log(math.log(big))
    assert abs(mk_asymptotic(big) - ref) <= 0.15 * ref
    for k in (10**4, 10**5, 10**6):
        assert mk_asymptotic(10 * k) > mk_asymptotic(k)


def test_mk_asymptotic_small_k():
    with pytest.raises(AsymptoticRegimeError):
        mk_asymptotic(10)
    with pytest.raises(AsymptoticRegimeError):
        mk_asymptotic(20)
