"""Set-partition diagrams on two rows of ``n`` nodes and their concatenation.

Node indices are internal and 0-based: ``0..n-1`` are the northern nodes
``1..n`` and ``n..2n-1`` are the southern nodes ``1bar..nbar``.  A diagram is
stored as a restricted growth string over that node order, which is the
canonical form "blocks sorted by least label" with northern labels first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    pass


def _rgs(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


@dataclass(frozen=True)
class SetPartitionDiagram:
    n: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != 2 * self.n:
            raise DiagramError(f"expected {2 * self.n} labels, got {len(self.labels)}")
        if _rgs(self.labels) != tuple(self.labels):
            raise DiagramError("labels are not in canonical form; use from_labels")

    @classmethod
    def from_labels(cls, n: int, labels: Sequence[int]) -> SetPartitionDiagram:
        return cls(n, _rgs(labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> SetPartitionDiagram:
        """Blocks use ``i`` for northern node i and ``-i`` for southern node ibar."""
        labels = [-1] * (2 * n)
        for b, block in enumerate(blocks):
            for x in block:
                if x == 0 or abs(x) > n:
                    raise DiagramError(f"node {x} out of range for n={n}")
                idx = x - 1 if x > 0 else n - x - 1
                if labels[idx] != -1:
                    raise DiagramError(f"node {x} appears twice")
                labels[idx] = b
        if -1 in labels:
            raise DiagramError("blocks do not cover all nodes")
        return cls.from_labels(n, labels)

    @classmethod
    def identity(cls, n: int) -> SetPartitionDiagram:
        return cls.from_labels(n, list(range(n)) * 2)

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> SetPartitionDiagram:
        """Joins northern node ``perm[i]`` to southern node ``i`` (0-based).

        With this convention ``permutation(a) * permutation(b) == permutation(a o b)``.
        """
        n = len(perm)
        labels = [0] * (2 * n)
        for i, j in enumerate(perm):
            labels[j] = i
            labels[n + i] = i
        return cls.from_labels(n, labels)

    def blocks(self) -> list[list[int]]:
        """Blocks in external notation (``i`` north, ``-i`` south), canonical order."""
        out: list[list[int]] = [[] for _ in range(max(self.labels, default=-1) + 1)]
        for idx, b in enumerate(self.labels):
            out[b].append(idx + 1 if idx < self.n else -(idx - self.n + 1))
        return out

    @property
    def north(self) -> tuple[int, ...]:
        return self.labels[: self.n]

    @property
    def south(self) -> tuple[int, ...]:
        return self.labels[self.n :]

    @property
    def block_count(self) -> int:
        return max(self.labels, default=-1) + 1

    @property
    def propagating_count(self) -> int:
        return len(set(self.north) & set(self.south))

    def flip(self) -> SetPartitionDiagram:
        """Reflection in the horizontal axis (the algebra anti-involution)."""
        return SetPartitionDiagram.from_labels(self.n, self.south + self.north)

    def extend(self, extra: int = 1) -> SetPartitionDiagram:
        """Append ``extra`` vertical strands on the right."""
        n2 = self.n + extra
        top = self.block_count
        north = list(self.north) + [top + k for k in range(extra)]
        south = list(self.south) + [top + k for k in range(extra)]
        return SetPartitionDiagram.from_labels(n2, north + south)

    def to_json(self) -> list[list[int]]:
        return self.blocks()

    def __str__(self) -> str:
        def name(x: int) -> str:
            return str(x) if x > 0 else f"{-x}'"

        return "{" + ", ".join("{" + ",".join(name(x) for x in b) + "}" for b in self.blocks()) + "}"


@lru_cache(maxsize=None)
def _compose_labels(n: int, top: tuple[int, ...], bottom: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    # union-find over 3n nodes: 0..n-1 top row, n..2n-1 middle, 2n..3n-1 bottom
    parent = list(range(3 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for offset, labels in ((0, top), (n, bottom)):
        first: dict[int, int] = {}
        for idx, b in enumerate(labels):
            node = offset + idx
            if b in first:
                union(first[b], node)
            else:
                first[b] = node
    outer = {find(x) for x in range(n)} | {find(x) for x in range(2 * n, 3 * n)}
    loops = len({find(x) for x in range(n, 2 * n)} - outer)
    result = [find(x) for x in range(n)] + [find(x) for x in range(2 * n, 3 * n)]
    return _rgs(result), loops


def compose(x: SetPartitionDiagram, y: SetPartitionDiagram) -> tuple[SetPartitionDiagram, int]:
    """``x`` stacked on top of ``y``: the resulting diagram and the number of closed components."""
    if x.n != y.n:
        raise DiagramError("diagrams of different sizes")
    labels, loops = _compose_labels(x.n, x.labels, y.labels)
    return SetPartitionDiagram(x.n, labels), loops


def diagram_mult(x: SetPartitionDiagram, y: SetPartitionDiagram, delta, field=None):
    """Product ``x * y`` as ``(diagram, delta^loops)``; the power is taken in ``field`` if given."""
    z, loops = compose(x, y)
    coeff = field.pow(field.coerce(delta), loops) if field is not None else delta**loops
    return z, coeff


def set_partitions_rgs(m: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of length ``m`` in lexicographic order."""

    def rec(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from rec(prefix, max(top, b))
            prefix.pop()

    if m == 0:
        yield ()
        return
    yield from rec([0], 0)


@lru_cache(maxsize=None)
def all_diagrams(n: int) -> tuple[SetPartitionDiagram, ...]:
    return tuple(SetPartitionDiagram(n, rgs) for rgs in set_partitions_rgs(2 * n))


@lru_cache(maxsize=None)
def bell(m: int) -> int:
    """Bell numbers by the Bell triangle (independent of the enumeration above)."""
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    if m == k:
        return 1
    if k == 0 or k > m:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


# -- generators -----------------------------------------------------------------


def _check_index(n: int, *idx: int) -> None:
    for i in idx:
        if not 1 <= i <= n:
            raise DiagramError(f"index {i} out of range 1..{n}")


def s_diagram(n: int, i: int, j: int) -> SetPartitionDiagram:
    """Transposition of strands ``i`` and ``j``."""
    _check_index(n, i, j)
    if i == j:
        raise DiagramError("s_{i,j} needs i != j")
    perm = list(range(n))
    perm[i - 1], perm[j - 1] = j - 1, i - 1
    return SetPartitionDiagram.permutation(perm)


def p_pair_diagram(n: int, i: int, j: int) -> SetPartitionDiagram:
    """Strands ``i`` and ``j`` merged into one block ``{i, j, ibar, jbar}``."""
    _check_index(n, i, j)
    if i == j:
        raise DiagramError("p_{i,j} needs i != j")
    blocks = [[k, -k] for k in range(1, n + 1) if k not in (i, j)] + [[i, j, -i, -j]]
    return SetPartitionDiagram.from_blocks(n, blocks)


def p_single_diagram(n: int, i: int) -> SetPartitionDiagram:
    """Strand ``i`` cut into singletons ``{i}`` and ``{ibar}``."""
    _check_index(n, i)
    blocks = [[k, -k] for k in range(1, n + 1) if k != i] + [[i], [-i]]
    return SetPartitionDiagram.from_blocks(n, blocks)


def generators(n: int) -> dict[str, SetPartitionDiagram]:
    """The generating family: ``s_{i,j}``, ``p_{i,j}`` for ``i < j`` and ``p_i``."""
    out: dict[str, SetPartitionDiagram] = {}
    for i, j in combinations(range(1, n + 1), 2):
        out[f"s_{i},{j}"] = s_diagram(n, i, j)
    for i, j in combinations(range(1, n + 1), 2):
        out[f"p_{i},{j}"] = p_pair_diagram(n, i, j)
    for i in range(1, n + 1):
        out[f"p_{i}"] = p_single_diagram(n, i)
    return out


def permutation_diagrams(n: int) -> list[SetPartitionDiagram]:
    return [SetPartitionDiagram.permutation(p) for p in permutations(range(n))]


def conjugate(d: SetPartitionDiagram, perm: Sequence[int]) -> SetPartitionDiagram:
    """``w d w^-1`` for the permutation diagram ``w`` of ``perm``: relabel both rows."""
    n = d.n
    labels = [0] * (2 * n)
    for idx in range(n):
        labels[perm[idx]] = d.labels[idx]
        labels[n + perm[idx]] = d.labels[n + idx]
    return SetPartitionDiagram.from_labels(n, labels)
