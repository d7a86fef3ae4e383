import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from glqdiv.partitions import (
    CoreQuotient,
    alpha,
    conjugate,
    core_quotient,
    count_t_hooks,
    from_core_quotient,
    gen_partitions,
    gen_t_cores,
    hook_lengths,
    is_t_core,
    partitions_of,
    qoppa,
    quotient_hook_multiset,
    sym_degree,
)
from oracles import (
    core_by_rim_hook_removal,
    count_partitions_recursive,
    count_syt,
    euler_pentagonal,
    hooks_cellwise,
)


def test_gen_partitions_small():
    assert list(gen_partitions(0)) == [()]
    assert list(gen_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(gen_partitions(4))) == count_partitions_recursive(4) == 5


def test_gen_partitions_counts_match_pentagonal_recurrence():
    p = euler_pentagonal(20)
    assert p[10] == 42
    for n in range(21):
        assert len(partitions_of(n)) == p[n]


def test_gen_partitions_order_and_uniqueness():
    for n in range(1, 12):
        lams = partitions_of(n)
        assert list(lams) == sorted(lams, reverse=True)
        assert len(set(lams)) == len(lams)
        assert all(sum(lam) == n for lam in lams)


def test_gen_partitions_rejects_negative():
    with pytest.raises(ValueError):
        list(gen_partitions(-1))


@pytest.mark.parametrize(
    "lam, hooks",
    [((2, 1), (3, 1, 1)), ((), ()), ((5,), (5, 4, 3, 2, 1)), ((1, 1, 1), (3, 2, 1))],
)
def test_hook_lengths_examples(lam, hooks):
    assert hook_lengths(lam) == hooks


@given(partitions())
def test_hook_lengths_match_cellwise_oracle(lam):
    hooks = hook_lengths(lam)
    assert list(hooks) == hooks_cellwise(lam)
    assert len(hooks) == sum(lam)
    if lam:
        assert max(hooks) == lam[0] + len(lam) - 1


@pytest.mark.parametrize("lam, value", [((1, 1, 1), 3), ((4,), 0), ((2, 2), 2), ((), 0)])
def test_alpha(lam, value):
    assert alpha(lam) == value


def test_sym_degree_examples():
    assert sym_degree((2, 1)) == count_syt((2, 1)) == 2
    assert sym_degree((6,)) == 1
    assert sym_degree((1, 1, 1, 1)) == 1


def test_sym_degree_matches_tableaux_count():
    for n in range(9):
        for lam in partitions_of(n):
            assert sym_degree(lam) == count_syt(lam)


@pytest.mark.parametrize("n", range(13))
def test_sum_of_squares_is_factorial(n):
    assert sum(sym_degree(lam) ** 2 for lam in partitions_of(n)) == math.factorial(n)


@given(partitions(max_size=25))
def test_sym_degree_conjugation_symmetry(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sym_degree(lam) == sym_degree(conjugate(lam))


def test_core_quotient_examples():
    cq = core_quotient((2, 2), 2)
    assert cq.core == ()
    assert sum(sum(p) for p in cq.quotient) == 2
    assert cq.quotient == ((1,), (1,))
    assert count_t_hooks((2, 2), 2) == 2

    big = core_quotient((5, 3, 3, 2), 3)
    assert big == CoreQuotient((5, 3, 1, 1), ((1,), (), ()), 3)
    assert from_core_quotient(big) == (5, 3, 3, 2)


@given(partitions())
def test_t_equals_one_is_trivial(lam):
    assert core_quotient(lam, 1) == CoreQuotient((), (lam,), 1)
    assert count_t_hooks(lam, 1) == sum(lam)


def test_t_core_is_its_own_core():
    for t in range(2, 5):
        for n in range(10):
            for lam in gen_t_cores(n, t):
                cq = core_quotient(lam, t)
                assert cq.core == lam
                assert all(p == () for p in cq.quotient)
                assert qoppa(lam, t) == (0,) * t + (n,)


def test_from_core_quotient_trivial_cases():
    assert from_core_quotient(CoreQuotient((), ((3, 1),), 1)) == (3, 1)
    assert from_core_quotient(CoreQuotient((), ((), (), ()), 3)) == ()


def test_from_core_quotient_rejects_non_core():
    with pytest.raises(ValueError):
        from_core_quotient(CoreQuotient((2,), ((), ()), 2))
    with pytest.raises(ValueError):
        from_core_quotient(CoreQuotient((), ((),), 2))


@pytest.mark.parametrize("t", range(1, 6))
def test_core_quotient_invariants_exhaustive(t):
    for n in range(13):
        for lam in partitions_of(n):
            cq = core_quotient(lam, t)
            assert from_core_quotient(cq) == lam
            assert is_t_core(cq.core, t)
            qsize = sum(sum(p) for p in cq.quotient)
            assert n == sum(cq.core) + t * qsize
            assert count_t_hooks(lam, t) == qsize
            scaled = Counter(h // t for h in hook_lengths(lam) if h % t == 0)
            assert scaled == quotient_hook_multiset(lam, t)
            assert sum(qoppa(lam, t)) == n


@given(partitions(max_size=30), st.integers(min_value=1, max_value=7))
def test_core_matches_rim_hook_stripping(lam, t):
    core, removed = core_by_rim_hook_removal(lam, t)
    cq = core_quotient(lam, t)
    assert cq.core == core
    assert removed == sum(sum(p) for p in cq.quotient)


@given(
    st.integers(min_value=1, max_value=5).flatmap(
        lambda t: st.tuples(st.just(t), st.lists(partitions(max_size=5), min_size=t, max_size=t))
    ),
    st.integers(min_value=0, max_value=8),
)
def test_from_core_quotient_then_back(tq, core_size):
    t, quotient = tq
    cores = gen_t_cores(core_size, t)
    core = cores[0] if cores else ()
    cq = CoreQuotient(core, tuple(quotient), t)
    assert core_quotient(from_core_quotient(cq), t) == cq


def test_gen_t_cores_examples():
    assert gen_t_cores(0, 2) == ((),)
    assert gen_t_cores(3, 2) == ((2, 1),)
    assert gen_t_cores(2, 2) == ()
    for n in range(12):
        expected = tuple(lam for lam in partitions_of(n) if count_t_hooks(lam, 3) == 0)
        assert gen_t_cores(n, 3) == expected


def test_qoppa_examples():
    assert qoppa((), 3) == (0, 0, 0, 0)
    value = qoppa((2, 2), 2)
    assert sum(value) == 4 and value[-1] == 0


def test_rejects_bad_t():
    with pytest.raises(ValueError):
        core_quotient((1,), 0)
    with pytest.raises(ValueError):
        count_t_hooks((1,), 0)
