from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from oracles import multinomial_moment, simplex_integral
from sieve_mk.simplex import UniPoly, binomial_poly, g_poly, moment_integral, monomial_integral


def test_g_poly_small_cases():
    assert g_poly(0, 2) == UniPoly((1,))
    assert g_poly(1, 2) == UniPoly((0, 2))
    assert g_poly(2, 2) == UniPoly((0, 20, 4))
    # k = 1 cross-check: int_0^1 t^4 = 1/5 = G_{2,2}(1)/5!
    assert g_poly(2, 2)(1) / 120 == Fraction(1, 5)


@pytest.mark.parametrize("b", range(1, 8))
@pytest.mark.parametrize("j", [1, 2, 3])
def test_g_poly_degree(b, j):
    assert g_poly(b, j).degree == b


def test_binomial_poly_matches_comb():
    from math import comb

    for r in range(6):
        for x in range(10):
            assert binomial_poly(r)(x) == comb(x, r)


@pytest.mark.parametrize(
    "k, a, exps, expected",
    [(2, 0, [0, 0], Fraction(1, 2)), (2, 2, [0, 0], Fraction(1, 12)), (1, 0, [4], Fraction(1, 5))],
)
def test_monomial_integral_examples(k, a, exps, expected):
    assert monomial_integral(k, a, exps) == expected


@pytest.mark.parametrize("a, exps", [(0, [1, 2]), (2, [3, 0]), (1, [1, 1, 1]), (3, [0, 2, 1])])
def test_monomial_integral_against_symbolic(a, exps):
    ts = sp.symbols(f"t1:{len(exps) + 1}")
    expr = (1 - sum(ts)) ** a * sp.Mul(*[t**e for t, e in zip(ts, exps)])
    assert monomial_integral(len(exps), a, exps) == simplex_integral(expr, ts)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=5), st.integers(0, 4), st.randoms())
def test_monomial_integral_permutation_symmetric(exps, a, rnd):
    shuffled = list(exps)
    rnd.shuffle(shuffled)
    assert monomial_integral(len(exps), a, exps) == monomial_integral(len(exps), a, shuffled)


@pytest.mark.parametrize(
    "k, a, b, j, expected",
    [(2, 0, 0, 2, Fraction(1, 2)), (2, 0, 1, 2, Fraction(1, 6)), (1, 0, 2, 2, Fraction(1, 5))],
)
def test_moment_integral_examples(k, a, b, j, expected):
    assert moment_integral(k, a, b, j) == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_moment_integral_matches_multinomial_expansion(k, j):
    for b in range(0, 7):
        for a in range(0, 7 - j * b if j * b <= 6 else 0):
            got = moment_integral(k, a, b, j)
            assert got == multinomial_moment(k, a, b, j)
            assert got > 0


def test_moment_integral_symbolic_k3():
    ts = sp.symbols("t1:4")
    p1 = sum(ts)
    p2 = sum(t**2 for t in ts)
    assert moment_integral(3, 1, 2, 2) == simplex_integral((1 - p1) * p2**2, ts)


@given(st.integers(1, 30), st.integers(0, 6), st.integers(1, 3))
def test_g_value_positive(k, b, j):
    assert g_poly(b, j)(k) > 0
