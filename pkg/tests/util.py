"""Shared test helpers: independent oracles and hypothesis strategies."""

from functools import lru_cache

from hypothesis import strategies as st

from qyoung.partitions import Partition


@lru_cache(maxsize=None)
def partition_count_oracle(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
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
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count_oracle(n - g1)
        if g2 <= n:
            total += sign * partition_count_oracle(n - g2)
        k += 1
    return total


@st.composite
def random_partitions(draw, max_size=30):
    """Random partitions of size <= max_size, built from sorted positive parts."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    remaining = n
    cap = n
    while remaining > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return Partition(tuple(parts))
