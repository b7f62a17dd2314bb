"""
Integer partitions, the two total orders used to index every matrix in the
package, and set partitions (used by the cumulant formula).

Partitions are tuples of positive integers sorted in decreasing order.  The
empty tuple is the unique partition of 0.  The textual form used by the CLI
and the on-disk formats is ``"3,1,1"``, with ``"-"`` for the empty partition.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> Partition([1, 3, 1])
    Partition(3, 1, 1)
    >>> Partition([3, 1]).conjugate()
    Partition(2, 1, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return "Partition(" + ", ".join(map(str, self)) + ")"

    def __str__(self):
        return to_str(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def rank(self) -> int:
        return sum(self) - len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def z(self) -> int:
        return z(self)


EMPTY = Partition()


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def size(lam) -> int:
    return sum(lam)


def length(lam) -> int:
    return len(lam)


def rank(lam) -> int:
    return sum(lam) - len(lam)


def multiplicity(lam, i: int) -> int:
    return tuple(lam).count(i)


def conjugate(lam) -> Partition:
    return _as_partition(lam).conjugate()


def z(lam) -> int:
    """Centralizer order: prod over i of m_i! * i**m_i."""
    out = 1
    for i, m in Counter(lam).items():
        out *= factorial(m) * i**m
    return out


def union(lam, mu) -> Partition:
    return Partition(tuple(lam) + tuple(mu))


def oplus(lam, mu) -> Partition:
    """Entry-wise sum, shorter partition padded with zeros."""
    k = max(len(lam), len(mu))
    a = tuple(lam) + (0,) * (k - len(lam))
    b = tuple(mu) + (0,) * (k - len(mu))
    return Partition(x + y for x, y in zip(a, b))


def minus_one(lam) -> Partition:
    return Partition(p - 1 for p in lam if p > 1)


def ones(k: int) -> Partition:
    return Partition((1,) * k)


def remove_part(lam, part: int) -> Partition | None:
    """Remove one occurrence of ``part``; None if ``part`` does not occur."""
    parts = list(lam)
    if part not in parts:
        return None
    parts.remove(part)
    return Partition(parts)


def dominates(lam, mu) -> bool:
    """True iff mu is below lam in dominance order (mu ≺ lam), equal sizes."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of equal size")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if b > a:
            return False
    return True


def total_key(lam) -> tuple:
    """Sort key realising ``total_leq``: longer first, then lexicographic."""
    return (-len(lam), tuple(lam))


def total_leq(mu, lam) -> bool:
    if sum(mu) != sum(lam):
        raise ValueError(f"total order compares equal sizes, got {mu} and {lam}")
    return total_key(mu) <= total_key(lam)


def dual_key(lam) -> tuple:
    return total_key(conjugate(lam))


def dual_leq(mu, lam) -> bool:
    """Dual order: compare conjugates under ``total_leq``.

    Ascending dual order lists ``[3], [2,1], [1,1,1]``, which is the row
    order of every f-indexed table.
    """
    if sum(mu) != sum(lam):
        raise ValueError(f"dual order compares equal sizes, got {mu} and {lam}")
    return dual_key(mu) <= dual_key(lam)


def _partitions_desc(n: int, maxpart: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, ascending in ``total_leq``.

    >>> [list(p) for p in all_partitions(3)]
    [[1, 1, 1], [2, 1], [3]]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    parts = [Partition(p) for p in _partitions_desc(n, n)]
    return tuple(sorted(parts, key=total_key))


def dual_sorted(n: int) -> tuple[Partition, ...]:
    return tuple(sorted(all_partitions(n), key=dual_key))


def partitions_of_rank(n: int, r: int) -> tuple[Partition, ...]:
    return tuple(p for p in all_partitions(n) if rank(p) == r)


def partitions_of_length(n: int, l: int) -> tuple[Partition, ...]:
    return tuple(p for p in all_partitions(n) if len(p) == l)


def set_partitions(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Set partitions of {1..n} in restricted-growth-string order.

    Each set partition is a tuple of blocks; blocks are sorted tuples, listed
    by their smallest element.
    """
    if n < 1:
        raise ValueError("set partitions need n >= 1")
    out = []

    def grow(word: list[int], top: int):
        if len(word) == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for point, b in enumerate(word, start=1):
                blocks[b].append(point)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in range(top + 2):
            word.append(b)
            grow(word, max(top, b))
            word.pop()

    grow([0], 0)
    return out


def multiset_splits(parts, sizes) -> Iterator[tuple[Partition, ...]]:
    """Ordered tuples of partitions with prescribed sizes whose union is ``parts``.

    Parts are treated as a multiset: ``[1,1]`` split into two blocks of size 1
    yields the single tuple ``([1], [1])``.
    """
    def rec(i: int, pool: Counter):
        if i == len(sizes):
            if not +pool:
                yield ()
            return
        for sub in _sub_multisets(pool, sizes[i]):
            for tail in rec(i + 1, pool - sub):
                yield (Partition(sub.elements()),) + tail

    yield from rec(0, Counter(parts))


def _sub_multisets(pool: Counter, target: int) -> Iterator[Counter]:
    items = sorted(pool.items(), reverse=True)

    def rec(k: int, left: int):
        if left == 0:
            yield Counter()
            return
        if k == len(items):
            return
        value, avail = items[k]
        for take in range(min(avail, left // value), -1, -1):
            for tail in rec(k + 1, left - take * value):
                if take:
                    tail = tail.copy()
                    tail[value] += take
                yield tail

    yield from rec(0, target)


def to_str(lam) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def from_str(text: str) -> Partition:
    """Parse ``"3,1,1"`` or ``"-"``.  Raises ValueError on malformed input."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
        raise ValueError(f"not a partition: {text!r}")
    return Partition(parts)
