"""Exact l-adic valuations and lifting-the-exponent identities.

The LTE formulas let us read off ``v_l(q^n - 1)`` and valuations of long
products of such factors without building the (huge) integers.  The prime
2 and odd primes follow different formulas and have separate entry points.

Valuations are plain ints.  The valuation of zero is :data:`INF`
(``math.inf``) wherever a function accepts zero; :func:`v_int` itself
rejects zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

INF = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``|n|`` in increasing order."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    return p, v_int(q, p)


def _check_prime(ell: int) -> None:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")


def v_int(x: int, ell: int) -> int:
    """Largest ``r`` with ``ell**r`` dividing the nonzero integer *x*."""
    if x == 0:
        raise ValueError("valuation of 0 is infinite; use v_frac")
    x = abs(x)
    r = 0
    # square the divisor to strip large powers quickly
    while x % ell == 0:
        step, power = 1, ell
        while x % (power * power) == 0:
            power *= power
            step *= 2
        x //= power
        r += step
    return r


def v_frac(x: Fraction | int, ell: int) -> int | float:
    """Valuation of a rational number; :data:`INF` for zero."""
    x = Fraction(x)
    if x == 0:
        return INF
    return v_int(x.numerator, ell) - v_int(x.denominator, ell)


def v_factorial(n: int, ell: int) -> int:
    """Legendre's formula for ``v_ell(n!)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    power = ell
    while power <= n:
        total += n // power
        power *= ell
    return total


def mult_order(q: int, ell: int) -> int:
    """Multiplicative order of *q* modulo the prime *ell*."""
    _check_prime(ell)
    if q % ell == 0:
        raise ValueError(f"{ell} divides {q}")
    r = q % ell
    t, x = 1, r
    while x != 1:
        x = x * r % ell
        t += 1
    return t


@dataclass(frozen=True)
class ValuationContext:
    """Constants for LTE arithmetic at a fixed prime *ell* and base *q*.

    ``t`` is the multiplicative order of ``q`` mod ``ell`` and ``tau`` is
    ``v_ell(q**t - 1)``.
    """

    ell: int
    q: int
    t: int
    tau: int

    @classmethod
    def create(cls, ell: int, q: int) -> "ValuationContext":
        t = mult_order(q, ell)
        return cls(ell, q, t, v_int(q**t - 1, ell))


@lru_cache(maxsize=None)
def context(ell: int, q: int) -> ValuationContext:
    return ValuationContext.create(ell, q)


def v2_pow_minus_one(a: int, n: int) -> int:
    """``v_2(a**n - 1)`` for odd ``a >= 3``."""
    if a % 2 == 0:
        raise ValueError("a must be odd")
    if a < 3:
        raise ValueError("a must be at least 3")
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        return v_int(a - 1, 2)
    return v_int(a - 1, 2) + v_int(a + 1, 2) + v_int(n, 2) - 1


def _require_odd(ctx: ValuationContext) -> None:
    if ctx.ell == 2:
        raise ValueError("use v2_pow_minus_one for the prime 2")


def vl_pow_minus_one(ctx: ValuationContext, n: int) -> int:
    """``v_ell(q**n - 1)`` for odd ``ell``."""
    _require_odd(ctx)
    if n < 1:
        raise ValueError("n must be positive")
    if n % ctx.t:
        return 0
    return v_int(n // ctx.t, ctx.ell) + ctx.tau


def v_pow_minus_one(ctx: ValuationContext, n: int) -> int:
    """``v_ell(q**n - 1)`` for any prime ``ell`` coprime to ``q``."""
    if ctx.ell == 2:
        return v2_pow_minus_one(ctx.q, n)
    return vl_pow_minus_one(ctx, n)


def v_product_geom(ctx: ValuationContext, A: int, B: int) -> int:
    """``v_ell(prod_{i=1..A} (q**(B*i) - 1))`` for odd ``ell``."""
    _require_odd(ctx)
    if A < 1 or B < 1:
        raise ValueError("A and B must be positive")
    h = math.gcd(B, ctx.t)
    m = A * h // ctx.t
    return m * (v_int(B // h, ctx.ell) + ctx.tau) + v_factorial(m, ctx.ell)


def v_psi(ctx: ValuationContext, n: int, step: int = 1) -> int:
    """``v_ell(prod_{i=1..n} (q**(step*i) - 1))`` for any prime ``ell``.

    Odd primes use the closed form; the prime 2 sums LTE term by term.
    """
    if n == 0:
        return 0
    if ctx.ell == 2:
        return sum(v2_pow_minus_one(ctx.q, step * i) for i in range(1, n + 1))
    return v_product_geom(ctx, n, step)


def v_falling_factorial(s: Fraction | int, r: Fraction | int, ell: int) -> int:
    """Valuation of ``floor(s)! / floor(s - r)!`` for ``0 < r < s``."""
    s, r = Fraction(s), Fraction(r)
    if not 0 < r < s:
        raise ValueError("need 0 < r < s")
    return v_factorial(math.floor(s), ell) - v_factorial(math.floor(s - r), ell)


def falling_factorial_bound_holds(s: Fraction | int, r: Fraction | int, ell: int) -> bool:
    """Check ``v((s)_r) <= ceil(r) + log_ell(s)`` without floating point."""
    s, r = Fraction(s), Fraction(r)
    excess = v_falling_factorial(s, r, ell) - math.ceil(r)
    return Fraction(ell) ** excess <= s
