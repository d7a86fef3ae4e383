"""Exact divisibility proportions over all irreducible characters of GL(n, q).

Every statistic is a weighted count over degree profiles: the predicate is
evaluated once per profile and weighted by the number of labels behind it.
Counts stay integers; :class:`ProportionReport` only turns them into a
decimal string for display.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from glqdiv.chardeg import helmet_certificate, v_degree, v_p_degree
from glqdiv.glq import count_X, enumerate_profiles, profile_multiplicity
from glqdiv.valuations import context, prime_factors, prime_power, v_int

DEGREE_DIVISIBLE = "degree-divisible"
HELMET_CERTIFIED = "helmet-certified"
P_DIVISIBLE = "p-divisible"
KINDS = (DEGREE_DIVISIBLE, HELMET_CERTIFIED, P_DIVISIBLE)


def format_decimal(num: int, den: int, places: int = 6) -> str:
    """``num/den`` to *places* decimals, rounding half to even, exactly."""
    scaled, rem = divmod(num * 10**places, den)
    if 2 * rem > den or (2 * rem == den and scaled % 2):
        scaled += 1
    whole, frac = divmod(scaled, 10**places)
    return f"{whole}.{frac:0{places}d}" if places else str(whole)


@dataclass(frozen=True)
class ProportionReport:
    kind: str
    n: int
    q: int
    d: int
    n0: int | None
    numerator: int
    denominator: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def decimal(self, places: int = 6) -> str:
        return format_decimal(self.numerator, self.denominator, places)

    def sort_key(self) -> tuple:
        return (self.q, self.d, self.n0 or 0, self.n, KINDS.index(self.kind))


def _weighted_count(n: int, q: int, predicate: Callable) -> tuple[int, int]:
    num = sum(profile_multiplicity(p, q) for p in enumerate_profiles(n, q) if predicate(p))
    return num, count_X(n, q)


def degree_divisible(mu, q: int, d: int) -> bool:
    """Whether ``d`` divides the degree of ``chi_mu``, via valuations only."""
    p, _ = prime_power(q)
    for ell in prime_factors(d):
        need = v_int(d, ell)
        have = v_p_degree(mu, q) if ell == p else v_degree(mu, context(ell, q))
        if have < need:
            return False
    return True


def proportion_degree_divisible(n: int, q: int, d: int) -> ProportionReport:
    if n < 1:
        raise ValueError("n must be positive")
    if d < 1:
        raise ValueError("d must be positive")
    num, den = _weighted_count(n, q, lambda mu: degree_divisible(mu, q, d))
    return ProportionReport(DEGREE_DIVISIBLE, n, q, d, None, num, den)


def proportion_p_divisible(n: int, q: int) -> ProportionReport:
    """Share of characters whose degree is divisible by the characteristic."""
    p, _ = prime_power(q)
    report = proportion_degree_divisible(n, q, p)
    return ProportionReport(P_DIVISIBLE, n, q, p, None, report.numerator, report.denominator)


def proportion_helmet_certified(n: int, q: int, d: int, n0: int) -> ProportionReport:
    """Share of characters certified to have values divisible by ``d`` on GL(n0, q).

    A lower bound for the true share at every ``g`` in GL(n0, q).
    """
    if math.gcd(d, q) != 1:
        raise ValueError(f"d={d} and q={q} are not coprime")
    if not 1 <= n0 <= n:
        raise ValueError(f"need 1 <= n0 <= n, got n0={n0}, n={n}")
    num, den = _weighted_count(n, q, lambda mu: helmet_certificate(mu, q, d, n0))
    return ProportionReport(HELMET_CERTIFIED, n, q, d, n0, num, den)


def voltas_exact_count(n: int, q: int) -> tuple[int, int]:
    """Count characters of degree prime to ``p`` and the expected ``q^n - q^(n-1)``.

    Raises ArithmeticError if the enumeration disagrees with the closed form.
    """
    if n < 1:
        raise ValueError("n must be positive")
    count, _ = _weighted_count(n, q, lambda mu: v_p_degree(mu, q) == 0)
    expected = q**n - q ** (n - 1)
    if count != expected:
        raise ArithmeticError(f"n={n}, q={q}: {count} characters of p'-degree, expected {expected}")
    return count, expected


def voltas_bound_check(n: int, q: int, d: int) -> bool:
    """Whether the share of degrees divisible by ``d`` is at most ``1/q``."""
    if math.gcd(d, q) == 1:
        raise ValueError(f"d={d} and q={q} are coprime")
    return proportion_degree_divisible(n, q, d).fraction <= Fraction(1, q)


@dataclass
class SweepConfig:
    q_list: Sequence[int] = ()
    d_list: Sequence[int] = ()
    n_range: Sequence[int] = ()
    n0_list: Sequence[int] = (1,)
    kinds: Sequence[str] = (HELMET_CERTIFIED,)
    output_format: str = "csv"
    output_path: str | None = None

    def validate(self) -> None:
        for q in self.q_list:
            prime_power(q)
        if not self.n_range:
            raise ValueError("n range is empty")
        if any(n < 1 for n in self.n_range):
            raise ValueError("n must be positive")
        if any(d < 1 for d in self.d_list):
            raise ValueError("d must be positive")
        for kind in self.kinds:
            if kind not in KINDS:
                raise ValueError(f"unknown kind {kind!r}")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.output_format!r}")
        if HELMET_CERTIFIED in self.kinds and any(n0 > min(self.n_range) for n0 in self.n0_list):
            raise ValueError("n0 must not exceed the smallest n")

    def cells(self) -> list[tuple]:
        out = []
        for q in self.q_list:
            for kind in self.kinds:
                if kind == P_DIVISIBLE:
                    out.extend((kind, n, q, prime_power(q)[0], None) for n in self.n_range)
                    continue
                for d in self.d_list:
                    if kind == DEGREE_DIVISIBLE:
                        out.extend((kind, n, q, d, None) for n in self.n_range)
                    else:
                        out.extend((kind, n, q, d, n0) for n0 in self.n0_list for n in self.n_range)
        return out


@dataclass
class SweepResult:
    rows: list[ProportionReport] = field(default_factory=list)
    errors: list[tuple[tuple, str]] = field(default_factory=list)


def run_cell(cell: tuple) -> ProportionReport:
    kind, n, q, d, n0 = cell
    if kind == DEGREE_DIVISIBLE:
        return proportion_degree_divisible(n, q, d)
    if kind == P_DIVISIBLE:
        return proportion_p_divisible(n, q)
    return proportion_helmet_certified(n, q, d, n0)


def _guarded(cell: tuple) -> ProportionReport | str:
    try:
        return run_cell(cell)
    except (ValueError, ArithmeticError) as exc:
        return f"{type(exc).__name__}: {exc}"


def thread_cap() -> int:
    raw = os.environ.get("GLQ_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"GLQ_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"GLQ_THREADS must be a positive integer, got {raw!r}")
    return value


def sweep(config: SweepConfig, workers: int | None = None) -> SweepResult:
    """Evaluate every cell of the grid; failing cells are recorded, not raised.

    Rows come back ordered by ``(q, d, n0, n)`` whatever the worker count.
    """
    cells = config.cells()
    workers = thread_cap() if workers is None else workers
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(cells))) as pool:
            outcomes = list(pool.map(_guarded, cells))
    else:
        outcomes = [_guarded(c) for c in cells]

    result = SweepResult()
    for cell, outcome in zip(cells, outcomes):
        if isinstance(outcome, str):
            result.errors.append((cell, outcome))
        else:
            result.rows.append(outcome)
    result.rows.sort(key=ProportionReport.sort_key)
    return result
