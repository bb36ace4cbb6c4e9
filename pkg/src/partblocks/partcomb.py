"""Partitions, Young diagrams and the label sets of partition algebras.

Partitions are stored without trailing zeros and are immutable; padding to
a fixed length (for the shifted-vector arithmetic in :mod:`blocktheory`) is
done at the call site.  Nodes use 1-based (row, column) coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby
from typing import Iterable, NamedTuple, Sequence


class PartitionError(ValueError):
    """Raised for sequences that are not partitions."""


class Node(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Use :func:`new_partition` to build one from a sequence that may carry
    trailing zeros.
    """

    parts: tuple[int, ...] = ()
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise PartitionError(f"parts must be positive: {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "degree", sum(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """1-based part lookup, zero beyond the length."""
        if i < 1:
            raise IndexError("partition rows are 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        chunks = []
        for value, run in groupby(self.parts):
            k = len(list(run))
            chunks.append(f"{value}^{k}" if k > 1 else str(value))
        return "(" + ",".join(chunks) + ")"

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        """The parts as an ``n``-tuple; ``n`` must be at least the length."""
        if n < len(self.parts):
            raise PartitionError(f"{self} has more than {n} rows")
        return self.parts + (0,) * (n - len(self.parts))

    def nodes(self) -> list[Node]:
        return [Node(r, c) for r, row in enumerate(self.parts, 1) for c in range(1, row + 1)]

    def contains(self, other: Partition) -> bool:
        """True iff the Young diagram of ``other`` lies inside this one."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self.parts, other.parts))

    def add_node(self, row: int) -> Partition:
        parts = list(self.padded(max(row, len(self))))
        parts[row - 1] += 1
        return Partition(tuple(parts))

    def remove_node(self, row: int) -> Partition:
        parts = list(self.parts)
        parts[row - 1] -= 1
        return new_partition(parts)

    def sort_key(self) -> tuple:
        """Degree first, then lexicographically descending."""
        return (self.degree, tuple(-x for x in self.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)


EMPTY = Partition(())


def new_partition(parts: Iterable[int]) -> Partition:
    """Build a partition, stripping trailing zeros.

    >>> str(new_partition((5, 5, 3, 2, 1, 1, 0, 0)))
    '(5^2,3,2,1^2)'
    """
    seq = [int(x) for x in parts]
    if any(x < 0 for x in seq):
        raise PartitionError(f"negative part in {seq!r}")
    while seq and seq[-1] == 0:
        seq.pop()
    return Partition(tuple(seq))


def as_partition(obj: Partition | Sequence[int]) -> Partition:
    return obj if isinstance(obj, Partition) else new_partition(obj)


def content_sum(lam: Partition) -> int:
    """Sum of col - row over all nodes."""
    # row i contributes sum_{c=1}^{l} (c - i) = l(l+1)/2 - i*l
    return sum(row * (row + 1) // 2 - i * row for i, row in enumerate(lam.parts, 1))


def is_p_regular(lam: Partition, p: int) -> bool:
    if p < 2:
        raise ValueError("p must be at least 2")
    return all(len(list(run)) < p for _, run in groupby(lam.parts))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Dominance order with degree: smaller degree always lies below."""
    if lam == mu:
        return True
    if lam.degree != mu.degree:
        return lam.degree < mu.degree
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam.part(i + 1)
        t += mu.part(i + 1)
        if s > t:
            return False
    return True


def removable_nodes(lam: Partition) -> list[Node]:
    return [Node(i, lam.part(i)) for i in range(1, len(lam) + 1) if lam.part(i + 1) < lam.part(i)]


def addable_nodes(lam: Partition) -> list[Node]:
    nodes = [Node(1, lam.part(1) + 1)]
    nodes += [Node(i, lam.part(i) + 1) for i in range(2, len(lam) + 2) if lam.part(i - 1) > lam.part(i)]
    return nodes


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    """The label set of all partitions of degree 0..n."""
    return [lam for k in range(n + 1) for lam in partitions_of(k)]


def sort_partitions(labels: Iterable[Partition]) -> list[Partition]:
    return sorted(labels, key=Partition.sort_key)
