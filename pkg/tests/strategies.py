"""Shared hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from partblocks.partcomb import Partition, new_partition

PRIMES = (2, 3, 5, 7)


@st.composite
def partitions(draw, max_degree: int = 12, min_degree: int = 0) -> Partition:
    n = draw(st.integers(min_degree, max_degree))
    parts = []
    remaining, cap = n, n
    while remaining:
        x = draw(st.integers(1, min(remaining, cap)))
        parts.append(x)
        remaining -= x
        cap = x
    return new_partition(parts)


primes = st.sampled_from(PRIMES)
