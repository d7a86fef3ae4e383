import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from glqdiv.valuations import (
    INF,
    ValuationContext,
    context,
    falling_factorial_bound_holds,
    mult_order,
    prime_power,
    v2_pow_minus_one,
    v_factorial,
    v_falling_factorial,
    v_frac,
    v_int,
    v_product_geom,
    vl_pow_minus_one,
)
from oracles import vp_bruteforce

ODD_PRIMES = (3, 5, 7, 11, 13)
PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25)


def test_v_int_examples():
    assert v_int(80, 2) == 4
    assert v_int(80, 7) == 0
    assert v_int(-80, 2) == 4


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=10**6),
       st.sampled_from([2, 3, 5, 7]))
def test_v_int_sign_invariance(k, m, ell):
    m = m * ell + 1 if m % ell == 0 else m
    assert v_int(ell**k * m, ell) == k == v_int(-(ell**k) * m, ell)
    assert v_int(ell**k * m, ell) == vp_bruteforce(ell**k * m, ell)


def test_v_int_rejects_zero_and_v_frac_is_infinite():
    with pytest.raises(ValueError):
        v_int(0, 3)
    assert v_frac(0, 3) == INF
    assert v_frac(Fraction(9, 4), 2) == -2


def test_v_factorial():
    assert v_factorial(10, 2) == vp_bruteforce(math.factorial(10), 2) == 8
    assert v_factorial(0, 5) == 0
    assert v_factorial(6, 7) == 0
    for ell in (2, 3, 5, 7):
        for n in range(301):
            assert v_factorial(n, ell) == vp_bruteforce(math.factorial(n), ell)


def test_mult_order():
    assert mult_order(2, 7) == 3
    assert mult_order(3, 5) == 4
    assert mult_order(8, 7) == 1
    for ell in ODD_PRIMES:
        for q in range(2, 30):
            if q % ell:
                t = mult_order(q, ell)
                assert pow(q, t, ell) == 1
                assert all(pow(q, s, ell) != 1 for s in range(1, t))


def test_mult_order_rejects_non_coprime():
    with pytest.raises(ValueError):
        mult_order(9, 3)
    with pytest.raises(ValueError):
        mult_order(2, 9)


def test_context_invariants():
    ctx = context(7, 2)
    assert ctx == ValuationContext(7, 2, 3, 1)
    assert context(3, 8) == ValuationContext(3, 8, 2, 2)  # 8^2 - 1 = 63


def test_v2_pow_minus_one():
    assert v2_pow_minus_one(3, 4) == 4
    assert v2_pow_minus_one(5, 2) == 3
    assert v2_pow_minus_one(9, 1) == v_int(8, 2)
    with pytest.raises(ValueError):
        v2_pow_minus_one(4, 3)
    with pytest.raises(ValueError):
        v2_pow_minus_one(1, 3)


def test_v2_pow_minus_one_grid():
    for a in range(3, 22, 2):
        for n in range(1, 201):
            assert v2_pow_minus_one(a, n) == vp_bruteforce(a**n - 1, 2)


def test_vl_pow_minus_one_examples():
    ctx = context(7, 2)
    assert vl_pow_minus_one(ctx, 3) == 1
    assert vl_pow_minus_one(ctx, 21) == vp_bruteforce(2**21 - 1, 7) == 2
    assert vl_pow_minus_one(ctx, 2) == 0
    with pytest.raises(ValueError):
        vl_pow_minus_one(context(2, 3), 2)


@pytest.mark.parametrize("ell", ODD_PRIMES)
def test_vl_pow_minus_one_grid(ell):
    for q in PRIME_POWERS:
        if q % ell == 0:
            continue
        ctx = context(ell, q)
        for n in range(1, 201):
            assert vl_pow_minus_one(ctx, n) == vp_bruteforce(q**n - 1, ell)


def test_v_product_geom_examples():
    ctx = context(7, 2)
    assert v_product_geom(ctx, 2, 3) == vp_bruteforce(7 * 63, 7) == 2
    # t = 3 and B = 1: no factor with index below 3
    assert v_product_geom(ctx, 2, 1) == 0
    for A in range(1, 30):
        m = A // ctx.t
        assert v_product_geom(ctx, A, 1) == m * ctx.tau + v_factorial(m, 7)


@pytest.mark.parametrize("ell", (3, 5, 7))
def test_v_product_geom_grid(ell):
    for q in (2, 3, 4, 5, 7, 8, 9):
        if q % ell == 0:
            continue
        ctx = context(ell, q)
        for B in range(1, 13):
            product = 1
            for A in range(1, 31):
                product *= q ** (B * A) - 1
                assert v_product_geom(ctx, A, B) == vp_bruteforce(product, ell)


def test_v_falling_factorial():
    assert v_falling_factorial(10, 3, 2) == vp_bruteforce(10 * 9 * 8, 2) == 4
    assert v_falling_factorial(12, 11, 3) == v_factorial(12, 3)
    assert v_falling_factorial(Fraction(7, 2), Fraction(1, 2), 3) == 0
    with pytest.raises(ValueError):
        v_falling_factorial(3, 3, 2)
    with pytest.raises(ValueError):
        v_falling_factorial(3, 0, 2)


def test_falling_factorial_bound_grid():
    for ell in (2, 3, 5, 7):
        for s2 in range(2, 2001):
            s = Fraction(s2, 2)
            for r2 in range(1, s2, max(1, s2 // 37)):
                assert falling_factorial_bound_holds(s, Fraction(r2, 2), ell)


def test_falling_factorial_bound_large_s():
    for ell in (2, 3):
        for s in range(1, 10**4 + 1, 97):
            for r in range(1, s, max(1, s // 50)):
                assert falling_factorial_bound_holds(s, r, ell)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(25) == (5, 2)
    for bad in (1, 6, 12):
        with pytest.raises(ValueError):
            prime_power(bad)
