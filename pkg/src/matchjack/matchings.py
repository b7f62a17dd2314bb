"""
Perfect matchings on the 2n points {1, 1^, ..., n, n^} and the counts a, a~.

Points are 0-based here: plain i is ``i`` and hatted i is ``n + i``.  A
matching is a tuple ``partner`` with ``partner[partner[x]] == x`` and no
fixed points.  ``from_pairs`` accepts the 1-based labels used in the
literature (plain i -> i, hatted i -> n + i).
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from itertools import permutations, product

from .partitions import Partition, all_partitions, partitions_of_length
from .report import GuardExceeded, Report

DEFAULT_LIMIT = 6


def _guard(n: int, limit: int | None):
    limit = DEFAULT_LIMIT if limit is None else limit
    if n > limit:
        raise GuardExceeded(f"matching enumeration limited to n <= {limit}, got n={n}")


def from_pairs(n: int, pairs) -> tuple:
    """Build a matching from 1-based pairs (hatted i written as n + i)."""
    partner = [None] * (2 * n)
    for x, y in pairs:
        x, y = x - 1, y - 1
        if x == y or partner[x] is not None or partner[y] is not None:
            raise ValueError(f"not a matching: {pairs}")
        partner[x], partner[y] = y, x
    if None in partner:
        raise ValueError(f"matching does not cover all 2n points: {pairs}")
    return tuple(partner)


def to_pairs(m) -> list[tuple[int, int]]:
    return [(x + 1, y + 1) for x, y in enumerate(m) if x < y]


def is_matching(m) -> bool:
    return all(0 <= y < len(m) and y != x and m[y] == x for x, y in enumerate(m))


def is_bipartite(m) -> bool:
    n = len(m) // 2
    return all((x < n) != (y < n) for x, y in enumerate(m))


def all_matchings(n: int):
    """All (2n-1)!! matchings, smallest unmatched point paired first."""
    partner = [None] * (2 * n)

    def rec(free):
        if not free:
            yield tuple(partner)
            return
        x = free[0]
        for k in range(1, len(free)):
            y = free[k]
            partner[x], partner[y] = y, x
            yield from rec(free[1:k] + free[k + 1:])
        partner[x] = None

    yield from rec(list(range(2 * n)))


def bipartite_matchings(n: int):
    """All n! bipartite matchings, i paired with hat(sigma(i))."""
    for sigma in permutations(range(n)):
        partner = [0] * (2 * n)
        for i, j in enumerate(sigma):
            partner[i], partner[n + j] = n + j, i
        yield tuple(partner)


def lambda_of(da, db) -> Partition:
    """Half-sizes of the connected components of da u db."""
    if len(da) != len(db):
        raise ValueError("matchings on different point sets")
    seen = [False] * len(da)
    halves = []
    for start in range(len(da)):
        if seen[start]:
            continue
        x, size, use_a = start, 0, True
        while True:
            seen[x] = True
            x = da[x] if use_a else db[x]
            seen[x] = True
            size += 1
            use_a = not use_a
            if x == start and use_a:
                break
        halves.append(size // 2)
    return Partition(halves)


def canonical_deltas(lam) -> tuple[tuple, tuple]:
    """delta1 = {i, i^}; delta2 sends i to the hat of its cyclic successor in its block of lam."""
    lam = Partition(lam)
    n = lam.size
    d1 = [0] * (2 * n)
    d2 = [0] * (2 * n)
    for i in range(n):
        d1[i], d1[n + i] = n + i, i
    start = 0
    for part in lam:
        for k in range(part):
            i = start + k
            j = start + (k + 1) % part
            d2[i], d2[n + j] = n + j, i
        start += part
    d1, d2 = tuple(d1), tuple(d2)
    assert lambda_of(d1, d2) == lam
    return d1, d2


def count_table(lam, bipartite_only: bool = False, deltas=None, limit: int | None = None) -> Counter:
    """Counter {(mu, nu): #delta with Lambda(d1, delta) = mu and Lambda(delta, d2) = nu}."""
    lam = Partition(lam)
    n = lam.size
    _guard(n, limit)
    d1, d2 = deltas if deltas is not None else canonical_deltas(lam)
    source = bipartite_matchings(n) if bipartite_only else all_matchings(n)
    return Counter((lambda_of(d1, d), lambda_of(d, d2)) for d in source)


@lru_cache(maxsize=None)
def _tables(n: int, bipartite_only: bool) -> dict:
    return {lam: count_table(lam, bipartite_only, limit=n) for lam in all_partitions(n)}


def count_tables(n: int, bipartite_only: bool = False, limit: int | None = None) -> dict:
    """{lam: count_table(lam)} for all lam |- n, memoized per (n, flag)."""
    _guard(n, limit)
    return _tables(n, bipartite_only)


def count_a(lam, mu, nu, bipartite_only: bool = False, limit: int | None = None) -> int:
    """a^lam_{mu,nu}, or a~^lam_{mu,nu} when ``bipartite_only``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not lam.size == mu.size == nu.size:
        raise ValueError("partitions of different sizes")
    return count_tables(lam.size, bipartite_only, limit)[lam][mu, nu]


def verify_b01(n: int, limit: int | None = None) -> Report:
    """c(1) == a and c(0) == a~ for every triple; marginal version at b = 1."""
    from .connection import c_table

    rep = Report(f"b=0/b=1 matchings n={n}")
    parts = all_partitions(n)
    a = count_tables(n, False, limit)
    at = count_tables(n, True, limit)
    c = c_table(n)
    for lam, mu, nu in product(parts, repeat=3):
        v = c[lam, mu, nu]
        rep.check(v(1) == a[lam][mu, nu], ("b=1", lam, mu, nu, str(v), a[lam][mu, nu]))
        rep.check(v(0) == at[lam][mu, nu], ("b=0", lam, mu, nu, str(v), at[lam][mu, nu]))
    for lam, mu in product(parts, repeat=2):
        for l in range(1, n + 1):
            nus = partitions_of_length(n, l)
            lhs = sum(c[lam, mu, nu](1) for nu in nus)
            rhs = sum(a[lam][mu, nu] for nu in nus)
            rep.check(lhs == rhs, ("marginal b=1", lam, mu, l))
    return rep


def verify_comb_multiplicativity(n: int, limit: int | None = None) -> Report:
    """The multiplicativity identity and its marginal form for both a and a~."""
    rep = Report(f"combinatorial multiplicativity n={n}")
    parts = all_partitions(n)
    for flag in (False, True):
        t = count_tables(n, flag, limit)
        tag = "a~" if flag else "a"
        for lam, mu, nu, rho in product(parts, repeat=4):
            lhs = sum(t[lam][mu, k] * t[k][nu, rho] for k in parts)
            rhs = sum(t[lam][th, rho] * t[th][mu, nu] for th in parts)
            rep.check(lhs == rhs, (tag, lam, mu, nu, rho))
        for lam, mu, nu in product(parts, repeat=3):
            for l in range(1, n + 1):
                nus = partitions_of_length(n, l)
                lhs = sum(t[lam][mu, k] * t[k][nu, r] for k in parts for r in nus)
                rhs = sum(t[lam][th, r] * t[th][mu, nu] for th in parts for r in nus)
                rep.check(lhs == rhs, (tag + " marginal", lam, mu, nu, l))
    return rep


def random_deltas(lam, rng: random.Random, tries: int = 10000) -> tuple[tuple, tuple]:
    """A random pair of bipartite matchings with Lambda = lam (rejection sampling)."""
    lam = Partition(lam)
    n = lam.size
    for _ in range(tries):
        d = []
        for _ in range(2):
            sigma = list(range(n))
            rng.shuffle(sigma)
            partner = [0] * (2 * n)
            for i, j in enumerate(sigma):
                partner[i], partner[n + j] = n + j, i
            d.append(tuple(partner))
        if lambda_of(d[0], d[1]) == lam:
            return d[0], d[1]
    raise RuntimeError(f"no bipartite pair of type {list(lam)} found")


def check_well_defined(n: int, seed: int = 0, trials: int = 3) -> Report:
    """Counts do not depend on which bipartite pair realises lam."""
    rep = Report(f"well-definedness n={n}")
    rng = random.Random(seed)
    for lam in all_partitions(n):
        for flag in (False, True):
            ref = count_table(lam, flag)
            for _ in range(trials):
                pair = random_deltas(lam, rng)
                rep.check(count_table(lam, flag, deltas=pair) == ref, (lam, flag, to_pairs(pair[0]), to_pairs(pair[1])))
    return rep
