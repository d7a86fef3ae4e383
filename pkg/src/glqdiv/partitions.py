"""Integer partitions: enumeration, hooks, and t-cores / t-quotients.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the empty partition.  Everything here is a pure function of
its arguments.

Cores and quotients are computed on a t-runner abacus.  The beta-set of a
partition ``lam`` with padded length ``L`` is ``{lam[i] + L - 1 - i}``
(0-based ``i``, ``lam`` padded with zeros), where ``L`` is the smallest
multiple of ``t`` that is at least ``len(lam)``.  Bead ``b`` sits on runner
``b % t`` at position ``b // t``, and the quotient component ``lam^r`` is the
partition read off runner ``r``.  Because ``L`` is a multiple of ``t``, adding
``t`` more beads shifts every runner by one position without relabelling
runners, so the ordering does not depend on the padding chosen.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from glqdiv.errors import IntegralityError

Partition = tuple[int, ...]


class CoreQuotient(NamedTuple):
    core: Partition
    quotient: tuple[Partition, ...]
    t: int


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate *parts* and return it as a canonical tuple (zeros dropped)."""
    lam = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {parts!r}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts!r}")
    return lam


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def gen_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of *n* in reverse-lexicographic order.

    ``(n)`` comes first and ``(1, ..., 1)`` last.  With *max_part*, only
    partitions whose largest part is at most *max_part* are produced.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in gen_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Cached tuple version of :func:`gen_partitions`."""
    return tuple(gen_partitions(n))


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """All hook lengths of *lam*, sorted in decreasing order."""
    conj = conjugate(lam)
    hooks = [
        (row - j - 1) + (conj[j] - i - 1) + 1
        for i, row in enumerate(lam)
        for j in range(row)
    ]
    return tuple(sorted(hooks, reverse=True))


def alpha(lam: Partition) -> int:
    return sum(i * part for i, part in enumerate(lam))


def sym_degree(lam: Partition) -> int:
    """Degree of the irreducible character of S_n labelled by *lam*.

    Hook-length formula, evaluated as an exact quotient.
    """
    num = math.factorial(sum(lam))
    den = math.prod(hook_lengths(lam))
    deg, rem = divmod(num, den)
    if rem:
        raise IntegralityError(f"hook product does not divide n! for {lam}")
    return deg


def count_t_hooks(lam: Partition, t: int) -> int:
    """Number of hooks of *lam* whose length is divisible by *t*."""
    if t < 1:
        raise ValueError("t must be positive")
    return sum(1 for h in hook_lengths(lam) if h % t == 0)


def is_t_core(lam: Partition, t: int) -> bool:
    return count_t_hooks(lam, t) == 0


def _padded_length(length: int, t: int) -> int:
    return -(-length // t) * t


def beta_set(lam: Partition, length: int) -> list[int]:
    """Beta-numbers of *lam* padded to *length* beads, largest first."""
    if length < len(lam):
        raise ValueError("padding shorter than the partition")
    padded = list(lam) + [0] * (length - len(lam))
    return [part + length - 1 - i for i, part in enumerate(padded)]


def _from_beta_set(beads: Sequence[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    length = len(beads)
    return as_partition([b - (length - 1 - i) for i, b in enumerate(beads)])


def _runner_partition(positions: list[int]) -> Partition:
    # positions on a single runner, read as a beta-set
    return _from_beta_set(positions)


def core_quotient(lam: Partition, t: int) -> CoreQuotient:
    """The t-core and t-quotient of *lam* (see the module docstring)."""
    if t < 1:
        raise ValueError("t must be positive")
    length = _padded_length(len(lam), t)
    runners: list[list[int]] = [[] for _ in range(t)]
    for b in beta_set(lam, length):
        runners[b % t].append(b // t)
    quotient = tuple(_runner_partition(pos) for pos in runners)
    core_beads = [r + t * i for r, pos in enumerate(runners) for i in range(len(pos))]
    return CoreQuotient(_from_beta_set(core_beads), quotient, t)


def from_core_quotient(cq: CoreQuotient) -> Partition:
    """Inverse of :func:`core_quotient` for the same runner convention."""
    core, quotient, t = cq
    core = as_partition(core)
    quotient = tuple(as_partition(p) for p in quotient)
    if t < 1:
        raise ValueError("t must be positive")
    if len(quotient) != t:
        raise ValueError(f"quotient must have {t} components, got {len(quotient)}")
    if not is_t_core(core, t):
        raise ValueError(f"{core} is not a {t}-core")

    length = _padded_length(len(core), t)
    while True:
        counts = [0] * t
        for b in beta_set(core, length):
            counts[b % t] += 1
        if all(counts[r] >= len(quotient[r]) for r in range(t)):
            break
        length += t

    beads = []
    for r, (k, part) in enumerate(zip(counts, quotient)):
        padded = list(part) + [0] * (k - len(part))
        beads.extend(r + t * (p + k - 1 - j) for j, p in enumerate(padded))
    return _from_beta_set(beads)


@lru_cache(maxsize=None)
def gen_t_cores(n: int, t: int) -> tuple[Partition, ...]:
    """All t-core partitions of *n*, in reverse-lexicographic order."""
    if t < 1:
        raise ValueError("t must be positive")
    return tuple(lam for lam in partitions_of(n) if is_t_core(lam, t))


def qoppa(lam: Partition, t: int) -> tuple[int, ...]:
    """``(t|lam^0|, ..., t|lam^(t-1)|, |core|)``; the entries sum to ``|lam|``."""
    core, quotient, _ = core_quotient(lam, t)
    return tuple(t * sum(p) for p in quotient) + (sum(core),)


def quotient_hook_multiset(lam: Partition, t: int) -> Counter:
    """Multiset union of the hook lengths of the t-quotient components."""
    out: Counter = Counter()
    for part in core_quotient(lam, t).quotient:
        out.update(hook_lengths(part))
    return out


def sym_degree_quotient(lam: Partition, t: int) -> int:
    """Product of the S_n degrees of the t-quotient components."""
    return math.prod(sym_degree(p) for p in core_quotient(lam, t).quotient)
