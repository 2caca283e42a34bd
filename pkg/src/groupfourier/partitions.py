"""Integer partitions: generation, counting and class sizes for S_n."""

from __future__ import annotations

from functools import cache
from math import factorial

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any(p < 1 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts: Partition, n: int | None = None) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not weakly decreasing positive parts: {parts}")
    if n is not None and sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    return parts


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographic (largest first)."""
    if n < 1:
        raise ValueError("n must be positive")

    def gen(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(parts: Partition) -> Partition:
    parts = check_partition(parts)
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def class_size(parts: Partition) -> int:
    """Number of permutations in S_n with this cycle type.

    Computed by the centralizer formula n! / (prod j^{m_j} m_j!) where m_j
    counts parts of size j.
    """
    parts = check_partition(parts)
    n = sum(parts)
    centralizer = 1
    for j in set(parts):
        m = parts.count(j)
        centralizer *= j**m * factorial(m)
    return factorial(n) // centralizer


@cache
def partition_count(n: int) -> int:
    """Partition function p(n) by the pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 == 1 else -1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total
