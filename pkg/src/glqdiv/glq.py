"""Bookkeeping for Green's labels of the irreducible characters of GL(n, q).

A label assigns a partition to each monic irreducible polynomial over F_q
other than ``x``, with ``sum deg(f) * |mu(f)| == n``.  The degree of the
character depends on ``f`` only through ``deg(f)``, so polynomials are never
built: a polynomial is a *slot* ``(d, j)`` with ``0 <= j < N_q(d)``.

Labels with the same per-degree multiset of partitions have the same
degree.  A :class:`DegreeProfile` records that multiset and
:func:`profile_multiplicity` counts the labels behind it, so statistics
over all labels only need to visit profiles.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from glqdiv.partitions import Partition, partitions_of
from glqdiv.valuations import prime_factors, prime_power


def mobius(n: int) -> int:
    ps = prime_factors(n)
    if any(n % (p * p) == 0 for p in ps):
        return 0
    return -1 if len(ps) % 2 else 1


@lru_cache(maxsize=None)
def count_irreducibles(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree *d* over F_q, minus ``x``."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if d < 1:
        raise ValueError("d must be positive")
    total = sum(mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    count = total // d
    return count - 1 if d == 1 else count


@dataclass(frozen=True, order=True)
class DegreeProfile:
    """Per-degree multisets of nonempty partitions.

    ``assignments`` is a tuple of ``(d, partitions)`` pairs sorted by ``d``,
    with each ``partitions`` tuple in reverse-lexicographic order.
    """

    assignments: tuple[tuple[int, tuple[Partition, ...]], ...] = ()

    @classmethod
    def from_dict(cls, mapping: dict[int, Iterable[Partition]]) -> "DegreeProfile":
        items = []
        for d in sorted(mapping):
            parts = tuple(sorted((tuple(p) for p in mapping[d]), reverse=True))
            if any(not p for p in parts):
                raise ValueError("profiles only list nonempty partitions")
            if parts:
                items.append((d, parts))
        return cls(tuple(items))

    @property
    def n(self) -> int:
        return sum(d * sum(sum(p) for p in parts) for d, parts in self.assignments)

    def items(self) -> Iterator[tuple[int, Partition]]:
        """Yield ``(degree, partition)`` for every entry, with repeats."""
        for d, parts in self.assignments:
            for p in parts:
                yield d, p

    def as_dict(self) -> dict[int, tuple[Partition, ...]]:
        return dict(self.assignments)

    def __str__(self) -> str:
        if not self.assignments:
            return "-"
        return "/".join(
            f"{d}:" + "".join("(" + ",".join(map(str, p)) + ")" for p in parts)
            for d, parts in self.assignments
        )


@dataclass(frozen=True)
class CharLabel:
    """A label ``mu``: slots ``(d, j)`` mapped to nonempty partitions."""

    entries: tuple[tuple[tuple[int, int], Partition], ...]

    @classmethod
    def from_dict(cls, mapping: dict[tuple[int, int], Partition]) -> "CharLabel":
        return cls(tuple(sorted((slot, tuple(p)) for slot, p in mapping.items() if p)))

    @property
    def n(self) -> int:
        return sum(d * sum(p) for (d, _), p in self.entries)

    def items(self) -> Iterator[tuple[int, Partition]]:
        for (d, _), p in self.entries:
            yield d, p

    def profile(self) -> DegreeProfile:
        grouped: dict[int, list[Partition]] = {}
        for d, p in self.items():
            grouped.setdefault(d, []).append(p)
        return DegreeProfile.from_dict(grouped)

    def validate(self, q: int) -> None:
        for (d, j), p in self.entries:
            if not 0 <= j < count_irreducibles(q, d):
                raise ValueError(f"slot ({d}, {j}) does not exist for q={q}")


def _multisets(
    items: tuple[Partition, ...], start: int, size: int, room: int
) -> Iterator[tuple[Partition, ...]]:
    # multisets drawn from items[start:] with total size `size`, at most `room` members
    if size == 0:
        yield ()
        return
    if room == 0:
        return
    for i in range(start, len(items)):
        p = items[i]
        if sum(p) <= size:
            for rest in _multisets(items, i, size - sum(p), room - 1):
                yield (p,) + rest


@lru_cache(maxsize=None)
def _partition_pool(m: int) -> tuple[Partition, ...]:
    pool = [p for k in range(1, m + 1) for p in partitions_of(k)]
    return tuple(sorted(pool, reverse=True))


@lru_cache(maxsize=None)
def enumerate_profiles(n: int, q: int) -> tuple[DegreeProfile, ...]:
    """Every degree profile of total *n* that is realisable over F_q, once each."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prime_power(q)

    def rec(d: int, remaining: int) -> Iterator[tuple]:
        if remaining == 0:
            yield ()
            return
        if d > remaining:
            return
        room = count_irreducibles(q, d)
        for size in range(remaining // d, -1, -1):
            for ms in _multisets(_partition_pool(size), 0, size, room):
                head = ((d, ms),) if ms else ()
                for tail in rec(d + 1, remaining - d * size):
                    yield head + tail

    return tuple(DegreeProfile(a) for a in rec(1, n))


def profile_multiplicity(profile: DegreeProfile, q: int) -> int:
    """Number of labels whose per-degree partition multisets match *profile*."""
    total = 1
    for d, parts in profile.assignments:
        avail = count_irreducibles(q, d)
        k = len(parts)
        if k > avail:
            raise ValueError(f"{k} partitions at degree {d} but only {avail} polynomials")
        ways = math.perm(avail, k)
        for m in Counter(parts).values():
            ways //= math.factorial(m)
        total *= ways
    return total


@lru_cache(maxsize=None)
def count_X(n: int, q: int) -> int:
    """Number of irreducible characters of GL(n, q)."""
    return sum(profile_multiplicity(p, q) for p in enumerate_profiles(n, q))


def class_count_series(n_max: int, q: int) -> list[int]:
    """Conjugacy-class counts of GL(n, q) for ``n = 0..n_max``.

    Coefficients of ``prod_{i>=1} (1 - u^i) / (1 - q u^i)``, truncated at
    degree *n_max*.  Independent of the profile enumeration.
    """
    series = [1] + [0] * n_max
    for i in range(1, n_max + 1):
        # multiply by 1/(1 - q u^i) then by (1 - u^i)
        for k in range(i, n_max + 1):
            series[k] += q * series[k - i]
        for k in range(n_max, i - 1, -1):
            series[k] -= series[k - i]
    return series


def enumerate_labels(n: int, q: int) -> Iterator[CharLabel]:
    """Every label of total *n*, slot by slot.  Exponential; small n only."""
    slots = [(d, j) for d in range(1, n + 1) for j in range(count_irreducibles(q, d))]

    def rec(i: int, remaining: int) -> Iterator[tuple]:
        if remaining == 0:
            yield ()
            return
        if i == len(slots):
            return
        d = slots[i][0]
        for size in range(remaining // d, -1, -1):
            for p in partitions_of(size):
                for rest in rec(i + 1, remaining - d * size):
                    yield ((slots[i], p),) + rest if p else rest

    for entries in rec(0, n):
        yield CharLabel(tuple(entries))
