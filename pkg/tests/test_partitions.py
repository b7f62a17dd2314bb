from collections import Counter
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from matchjack.partitions import (
    EMPTY,
    Partition,
    all_partitions,
    conjugate,
    dominates,
    dual_leq,
    dual_sorted,
    from_str,
    minus_one,
    multiset_splits,
    ones,
    oplus,
    partitions_of_length,
    partitions_of_rank,
    rank,
    remove_part,
    set_partitions,
    to_str,
    total_leq,
    union,
    z,
)

# p(n) for n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
BELL = [1, 1, 2, 5, 15, 52, 203]

partitions_st = st.lists(st.integers(1, 6), max_size=6).map(Partition)


def test_partition_normalizes_and_validates():
    assert Partition([1, 3, 1]) == (3, 1, 1)
    assert Partition([]) == EMPTY
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        Partition([-1])


def test_counts():
    for n, expected in enumerate(PARTITION_COUNTS):
        assert len(all_partitions(n)) == expected


def test_basic_statistics():
    lam = Partition([3, 1, 1])
    assert lam.size == 5 and lam.length == 3 and rank(lam) == 2
    assert lam.multiplicity(1) == 2
    assert conjugate(lam) == (3, 1, 1)
    assert conjugate([4, 2]) == (2, 2, 1, 1)
    assert z([2, 2, 1]) == 8
    assert z([1, 1, 1]) == 6


def test_z_counts_permutations_by_cycle_type():
    # n!/z_lambda is the size of the conjugacy class of type lambda
    for n in range(1, 6):
        counts = Counter()
        for p in permutations(range(n)):
            seen, lengths = set(), []
            for s in range(n):
                if s in seen:
                    continue
                k, x = 0, s
                while x not in seen:
                    seen.add(x)
                    x = p[x]
                    k += 1
                lengths.append(k)
            counts[Partition(lengths)] += 1
        for lam in all_partitions(n):
            assert counts[lam] == factorial(n) // z(lam)


def test_combinators():
    assert union([2, 1], [3, 1]) == (3, 2, 1, 1)
    assert oplus([2, 1], ones(4)) == (3, 2, 1, 1)
    assert minus_one([3, 1, 1]) == (2,)
    assert minus_one([1, 1]) == EMPTY
    assert remove_part([3, 2, 2], 2) == (3, 2)
    assert remove_part([3, 2], 1) is None


def test_total_order_examples():
    assert [list(p) for p in all_partitions(3)] == [[1, 1, 1], [2, 1], [3]]
    assert [to_str(p) for p in all_partitions(5)] == [
        "1,1,1,1,1", "2,1,1,1", "2,2,1", "3,1,1", "3,2", "4,1", "5"]
    assert total_leq([2, 1, 1], [2, 2])
    with pytest.raises(ValueError):
        total_leq([2], [1])


def test_dual_order_examples():
    assert [to_str(p) for p in dual_sorted(3)] == ["3", "2,1", "1,1,1"]
    assert [to_str(p) for p in dual_sorted(5)] == [
        "5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"]
    # a smaller largest part comes later in the dual order
    assert dual_leq([3, 1], [2, 2])


@pytest.mark.parametrize("n", range(1, 9))
def test_total_order_refines_dominance_and_length(n):
    parts = all_partitions(n)
    for mu in parts:
        for lam in parts:
            if dominates(lam, mu):
                assert total_leq(mu, lam)
            if len(lam) < len(mu):
                assert total_leq(mu, lam)


@given(partitions_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partitions_st)
def test_string_round_trip(lam):
    assert from_str(to_str(lam)) == lam


def test_string_parsing():
    assert from_str("3,1,1") == (3, 1, 1)
    assert from_str("-") == EMPTY
    assert to_str(EMPTY) == "-"
    for bad in ("1,2", "a", "3,,1", "0", "2,-1"):
        with pytest.raises(ValueError):
            from_str(bad)


def test_filters():
    assert [to_str(p) for p in partitions_of_length(5, 2)] == ["3,2", "4,1"]
    assert [to_str(p) for p in partitions_of_rank(4, 2)] == ["2,2", "3,1"]


def test_set_partitions():
    for n in range(1, 7):
        sps = set_partitions(n)
        assert len(sps) == BELL[n]
        assert len(set(sps)) == len(sps)
        for blocks in sps:
            assert sorted(x for b in blocks for x in b) == list(range(1, n + 1))
    assert set_partitions(2) == [((1, 2),), ((1,), (2,))]


def test_multiset_splits():
    assert list(multiset_splits([1, 1], [1, 1])) == [(Partition([1]), Partition([1]))]
    got = sorted(multiset_splits([2, 1, 1], [2, 2]))
    assert got == sorted([(Partition([2]), Partition([1, 1])), (Partition([1, 1]), Partition([2]))])
    assert list(multiset_splits([3], [1, 2])) == []


@given(partitions_st, st.integers(1, 3))
def test_multiset_splits_are_exact(lam, blocks):
    n = sum(lam)
    if n < blocks:
        return
    sizes = [n // blocks] * blocks
    sizes[0] += n - sum(sizes)
    seen = set()
    for split in multiset_splits(lam, sizes):
        assert [sum(s) for s in split] == sizes
        assert Counter(x for s in split for x in s) == Counter(lam)
        assert split not in seen
        seen.add(split)
