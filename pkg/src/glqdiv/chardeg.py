"""Degrees of the irreducible characters of GL(n, q) and their valuations.

Two independent routes to a degree are provided:

* exact big-integer arithmetic (:func:`degree`, :func:`degree_from_hooks`),
  used as the oracle;
* LTE valuation arithmetic (:func:`v_degree`), which never forms the degree
  and is what the statistics sweeps use.

Functions accept anything with ``.n`` and ``.items()`` yielding
``(polynomial degree, partition)`` pairs, i.e. both
:class:`~glqdiv.glq.CharLabel` and :class:`~glqdiv.glq.DegreeProfile`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from glqdiv.errors import IntegralityError
from glqdiv.partitions import (
    Partition,
    alpha,
    core_quotient,
    hook_lengths,
    sym_degree,
)
from glqdiv.valuations import (
    ValuationContext,
    context,
    prime_factors,
    prime_power,
    v_factorial,
    v_int,
    v_pow_minus_one,
    v_psi,
)


@dataclass(frozen=True)
class DegreeFactorization:
    a_mu: int
    b_mu: int
    d_mu: int


@dataclass(frozen=True)
class ValuationBound:
    exact: int
    lower_bound: int
    context: ValuationContext


def _exact_div(num: int, den: int, what: str) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise IntegralityError(f"{what} is not an integer: {num}/{den}")
    return quo


def psi(n: int, q: int) -> int:
    """``(q^n - 1)(q^(n-1) - 1)...(q - 1)``; 1 for ``n == 0``."""
    return math.prod(q**i - 1 for i in range(1, n + 1))


def unipotent_degree(lam: Partition, Q: int) -> int:
    """Degree of the unipotent character ``lam`` of GL(|lam|, Q)."""
    if Q < 2:
        raise ValueError("Q must be at least 2")
    num = Q ** alpha(lam) * psi(sum(lam), Q)
    den = math.prod(Q**h - 1 for h in hook_lengths(lam))
    return _exact_div(num, den, f"unipotent degree of {lam} at Q={Q}")


def degree(mu, q: int) -> DegreeFactorization:
    """Exact degree of ``chi_mu`` split as index factor times unipotent factor."""
    den = math.prod(psi(sum(lam), q**d) for d, lam in mu.items())
    a = _exact_div(psi(mu.n, q), den, "index factor")
    b = math.prod(unipotent_degree(lam, q**d) for d, lam in mu.items())
    return DegreeFactorization(a, b, a * b)


def degree_from_hooks(mu, q: int) -> int:
    """Degree straight from ``psi_n(q) * prod_f H(mu(f), q^d(f))`` in rationals."""
    value = Fraction(psi(mu.n, q))
    for d, lam in mu.items():
        Q = q**d
        value *= Fraction(Q ** alpha(lam), math.prod(Q**h - 1 for h in hook_lengths(lam)))
    if value.denominator != 1:
        raise IntegralityError(f"degree of {mu} is not an integer")
    return value.numerator


def group_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * psi(n, q)


def _require_coprime(ell: int, q: int) -> None:
    if q % ell == 0:
        raise ValueError(f"{ell} divides q={q}; use v_p_degree")


def v_degree(mu, ctx: ValuationContext) -> int:
    """``v_ell(d_mu)`` by lifting the exponent, for ``ell`` coprime to ``q``."""
    _require_coprime(ctx.ell, ctx.q)
    total = v_psi(ctx, mu.n)
    for d, lam in mu.items():
        total -= sum(v_pow_minus_one(ctx, d * h) for h in hook_lengths(lam))
    return total


def v2_lower_bound(mu, q: int) -> int:
    """Lower bound for ``v_2(d_mu)`` from S_n degrees, ``q`` odd."""
    if q % 2 == 0:
        raise ValueError("q must be odd")
    sizes = [sum(lam) for _, lam in mu.items()]
    multinomial = v_factorial(mu.n, 2) - sum(v_factorial(s, 2) for s in sizes)
    return multinomial + sum(v_int(sym_degree(lam), 2) for _, lam in mu.items())


def vl_lower_bound(mu, ctx: ValuationContext) -> int:
    """Lower bound for ``v_ell(d_mu)``, odd ``ell``, via t-cores and t-quotients."""
    if ctx.ell == 2:
        raise ValueError("use v2_lower_bound for the prime 2")
    _require_coprime(ctx.ell, ctx.q)
    ell, t = ctx.ell, ctx.t
    total = v_factorial(mu.n // t, ell)
    for d, lam in mu.items():
        h = math.gcd(d, t)
        total -= v_factorial(sum(lam) * h // t, ell)
        core, quotient, _ = core_quotient(lam, t)
        total += sum(core) // t
        total += sum(v_int(sym_degree(part), ell) for part in quotient)
    return total


def vl_lower_bound_by_degree(mu, ctx: ValuationContext) -> int:
    """Like :func:`vl_lower_bound`, but each ``mu(f)`` uses the order of ``q^d(f)``.

    The unipotent factor at ``Q = q^d`` is governed by the order of ``Q`` mod
    ``ell``, which is ``t / gcd(d, t)`` rather than ``t``.  With ``t`` in its
    place the bound can exceed the true valuation, e.g. ``q=2, ell=3`` and a
    single degree-2 polynomial carrying ``(2, 1)``.
    """
    if ctx.ell == 2:
        raise ValueError("use v2_lower_bound for the prime 2")
    _require_coprime(ctx.ell, ctx.q)
    ell, t = ctx.ell, ctx.t
    total = v_factorial(mu.n // t, ell)
    for d, lam in mu.items():
        h = math.gcd(d, t)
        total -= v_factorial(sum(lam) * h // t, ell)
        t_f = t // h
        core, quotient, _ = core_quotient(lam, t_f)
        total += sum(core) // t_f
        total += sum(v_int(sym_degree(part), ell) for part in quotient)
    return total


def valuation_bound(mu, ctx: ValuationContext) -> ValuationBound:
    """Pair the exact valuation with the matching lower bound."""
    if ctx.ell == 2:
        bound = v2_lower_bound(mu, ctx.q)
    else:
        bound = vl_lower_bound(mu, ctx)
    return ValuationBound(v_degree(mu, ctx), bound, ctx)


def v_p_degree(mu, q: int) -> int:
    """Valuation of ``d_mu`` at the defining characteristic ``p`` of ``q = p^e``."""
    _, e = prime_power(q)
    return e * sum(d * alpha(lam) for d, lam in mu.items())


def v_block_index(ctx: ValuationContext, n: int, n0: int) -> int:
    """``v_ell(prod_{i=0}^{n0-1} (q^(n-i) - 1))``, term by term."""
    return sum(v_pow_minus_one(ctx, n - i) for i in range(n0))


def helmet_certificate(mu, q: int, d: int, n0: int) -> bool:
    """Sufficient condition for ``d`` to divide ``chi_mu(g)`` for all ``g`` in GL(n0, q).

    For every prime ``ell | d`` require
    ``v_ell(d_mu) - v_ell(prod_{i<n0} (q^(n-i) - 1)) >= v_ell(d)``.
    ``False`` does not mean ``d`` fails to divide the value.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if math.gcd(d, q) != 1:
        raise ValueError(f"d={d} and q={q} are not coprime")
    n = mu.n
    if not 1 <= n0 <= n:
        raise ValueError(f"need 1 <= n0 <= n, got n0={n0}, n={n}")
    for ell in prime_factors(d):
        ctx = context(ell, q)
        if v_degree(mu, ctx) - v_block_index(ctx, n, n0) < v_int(d, ell):
            return False
    return True

