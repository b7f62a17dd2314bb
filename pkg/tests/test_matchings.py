import random
from itertools import product
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from matchjack.matchings import (
    all_matchings,
    bipartite_matchings,
    canonical_deltas,
    check_well_defined,
    count_a,
    count_table,
    count_tables,
    from_pairs,
    is_bipartite,
    is_matching,
    lambda_of,
    random_deltas,
    to_pairs,
    verify_b01,
    verify_comb_multiplicativity,
)
from matchjack.partitions import Partition, all_partitions, ones
from matchjack.report import GuardExceeded


def double_factorial(k):
    return prod(range(k, 0, -2))


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_counts(n):
    ms = list(all_matchings(n))
    assert len(ms) == double_factorial(2 * n - 1)
    assert len(set(ms)) == len(ms)
    assert all(is_matching(m) for m in ms)
    bs = list(bipartite_matchings(n))
    assert len(bs) == factorial(n)
    assert set(bs) == {m for m in ms if is_bipartite(m)}


def test_worked_example_on_four_points():
    # hatted i is written n + i
    d1 = from_pairs(4, [(1, 7), (3, 8), (4, 5), (2, 6)])
    d2 = from_pairs(4, [(1, 3), (7, 8), (4, 6), (2, 5)])
    assert is_bipartite(d1) and not is_bipartite(d2)
    assert lambda_of(d1, d2) == (2, 2)


def test_from_pairs_validation():
    with pytest.raises(ValueError):
        from_pairs(2, [(1, 3), (1, 4)])
    with pytest.raises(ValueError):
        from_pairs(2, [(1, 3)])
    assert to_pairs(from_pairs(2, [(1, 2), (3, 4)])) == [(1, 2), (3, 4)]


def test_lambda_examples():
    d1 = from_pairs(2, [(1, 3), (2, 4)])
    assert lambda_of(d1, d1) == (1, 1)
    assert lambda_of(d1, from_pairs(2, [(1, 2), (3, 4)])) == (2,)
    assert canonical_deltas([1]) == ((1, 0), (1, 0))
    d1, d2 = canonical_deltas([2])
    assert to_pairs(d2) == [(1, 4), (2, 3)]
    for n in range(1, 6):
        for lam in all_partitions(n):
            assert lambda_of(*canonical_deltas(lam)) == lam


@settings(max_examples=50)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.randoms(use_true_random=False))))
def test_lambda_symmetric_and_sized(args):
    n, rng = args
    ms = list(all_matchings(n))
    a, b = rng.choice(ms), rng.choice(ms)
    lam = lambda_of(a, b)
    assert lam == lambda_of(b, a)
    assert sum(lam) == n
    assert lambda_of(a, a) == ones(n)


def test_count_examples():
    assert count_a([2], [2], [2]) == 1
    assert count_a([2], [2], [2], bipartite_only=True) == 0
    assert count_a([1], [1], [1]) == 1
    for n in range(1, 5):
        for lam, mu in product(all_partitions(n), repeat=2):
            assert count_a(lam, mu, ones(n), bipartite_only=True) == int(lam == mu)


@pytest.mark.parametrize("n", range(1, 5))
def test_count_totals(n):
    for lam in all_partitions(n):
        assert sum(count_table(lam).values()) == double_factorial(2 * n - 1)
        assert sum(count_table(lam, True).values()) == factorial(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_bipartite_counts_symmetric(n):
    t = count_tables(n, True)
    for lam, mu, nu in product(all_partitions(n), repeat=3):
        assert t[lam][mu, nu] == t[lam][nu, mu]


def test_well_defined():
    for n in (2, 3, 4):
        rep = check_well_defined(n, seed=n)
        assert rep.passed, rep.violations[:3]


def test_random_deltas_have_requested_type():
    rng = random.Random(7)
    for lam in all_partitions(4):
        d1, d2 = random_deltas(lam, rng)
        assert is_bipartite(d1) and is_bipartite(d2)
        assert lambda_of(d1, d2) == lam


@pytest.mark.parametrize("n", range(1, 5))
def test_b01_agreement(n):
    rep = verify_b01(n)
    assert rep.passed, rep.violations[:3]


@pytest.mark.parametrize("n", range(1, 4))
def test_comb_multiplicativity(n):
    rep = verify_comb_multiplicativity(n)
    assert rep.passed, rep.violations[:3]


def test_guard():
    with pytest.raises(GuardExceeded):
        count_table(Partition([7]))
    with pytest.raises(GuardExceeded):
        count_a([2, 2], [4], [4], limit=3)
