"""Self-check suites run by ``glqdiv verify``.

Each suite walks a small exhaustive grid and raises
:class:`VerificationFailure` on the first identity that does not hold.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Callable

from glqdiv import chardeg, glq, partitions, statistics, valuations
from glqdiv.partitions import partitions_of

SMALL_Q = (2, 3, 4, 5)


class VerificationFailure(AssertionError):
    pass


def check(condition: bool, message: str) -> None:
    if not condition:
        raise VerificationFailure(message)


def verify_partitions(max_n: int = 12, max_t: int = 5) -> int:
    checked = 0
    for n in range(max_n + 1):
        lams = partitions_of(n)
        check(sum(partitions.sym_degree(lam) ** 2 for lam in lams) == math.factorial(n),
              f"sum of squared S_{n} degrees is not {n}!")
        for lam in lams:
            check(len(partitions.hook_lengths(lam)) == n, f"{lam}: hook count")
            check(partitions.sym_degree(lam) == partitions.sym_degree(partitions.conjugate(lam)),
                  f"{lam}: degree differs from conjugate")
            hooks = partitions.hook_lengths(lam)
            for t in range(1, max_t + 1):
                cq = partitions.core_quotient(lam, t)
                check(partitions.from_core_quotient(cq) == lam, f"{lam}, t={t}: round trip")
                check(partitions.is_t_core(cq.core, t), f"{lam}, t={t}: core has a {t}-hook")
                qsize = sum(sum(p) for p in cq.quotient)
                check(n == sum(cq.core) + t * qsize, f"{lam}, t={t}: size identity")
                check(partitions.count_t_hooks(lam, t) == qsize, f"{lam}, t={t}: t-hook count")
                scaled = Counter(h // t for h in hooks if h % t == 0)
                check(scaled == partitions.quotient_hook_multiset(lam, t),
                      f"{lam}, t={t}: hook correspondence")
                check(sum(partitions.qoppa(lam, t)) == n, f"{lam}, t={t}: qoppa sum")
                checked += 1
    return checked


def verify_valuations() -> int:
    checked = 0
    for a in range(3, 22, 2):
        for n in range(1, 201):
            check(valuations.v2_pow_minus_one(a, n) == valuations.v_int(a**n - 1, 2),
                  f"v2({a}^{n} - 1)")
            checked += 1
    prime_powers = [q for q in range(2, 26) if len(valuations.prime_factors(q)) == 1]
    for ell in (3, 5, 7, 11, 13):
        for q in prime_powers:
            if q % ell == 0:
                continue
            ctx = valuations.context(ell, q)
            for n in range(1, 201):
                check(valuations.vl_pow_minus_one(ctx, n) == valuations.v_int(q**n - 1, ell),
                      f"v{ell}({q}^{n} - 1)")
                checked += 1
    for n in range(301):
        check(valuations.v_factorial(n, 2) == valuations.v_int(math.factorial(n), 2),
              f"v2({n}!)")
    return checked


def verify_degrees(max_n: int = 5) -> int:
    checked = 0
    for q in SMALL_Q:
        series = glq.class_count_series(8, q)
        for n in range(9):
            check(glq.count_X(n, q) == series[n], f"class count n={n}, q={q}")
            check(glq.count_X(n, q) <= q**n, f"|X_{n}| > q^n for q={q}")
        for n in range(max_n + 1):
            total = 0
            for mu in glq.enumerate_profiles(n, q):
                fac = chardeg.degree(mu, q)
                check(fac.d_mu == chardeg.degree_from_hooks(mu, q), f"{mu}, q={q}: degree routes")
                for ell in (2, 3, 5, 7):
                    if q % ell == 0:
                        continue
                    ctx = valuations.context(ell, q)
                    exact = chardeg.v_degree(mu, ctx)
                    check(exact == valuations.v_int(fac.d_mu, ell), f"{mu}, q={q}, l={ell}: LTE route")
                    if ell == 2:
                        bound = chardeg.v2_lower_bound(mu, q)
                    else:
                        bound = chardeg.vl_lower_bound_by_degree(mu, ctx)
                    check(bound <= exact, f"{mu}, q={q}, l={ell}: lower bound exceeds valuation")
                total += glq.profile_multiplicity(mu, q) * fac.d_mu**2
                checked += 1
            check(total == chardeg.group_order(n, q), f"sum of squared degrees, n={n}, q={q}")
    return checked


def verify_voltas(max_n: int = 7) -> int:
    checked = 0
    for q in SMALL_Q:
        for n in range(1, max_n + 1):
            count, expected = statistics.voltas_exact_count(n, q)
            check(count == expected, f"n={n}, q={q}: {count} != {expected}")
            share = statistics.proportion_p_divisible(n, q).fraction
            ceiling = 1 - Fraction(expected, glq.count_X(n, q))
            check(share <= ceiling <= Fraction(1, q), f"n={n}, q={q}: p-divisible share too large")
            checked += 1
    return checked


SUITES: dict[str, Callable[[], int]] = {
    "partitions": verify_partitions,
    "valuations": verify_valuations,
    "degrees": verify_degrees,
    "voltas": verify_voltas,
}


def run_suite(name: str) -> dict[str, int]:
    """Run one suite (or ``"all"``); return checks performed per suite."""
    if name == "all":
        return {key: fn() for key, fn in SUITES.items()}
    if name not in SUITES:
        raise KeyError(name)
    return {name: SUITES[name]()}
