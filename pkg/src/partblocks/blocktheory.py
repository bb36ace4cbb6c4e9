"""Combinatorial block criteria for symmetric groups and partition algebras.

Every predicate here is pure integer arithmetic on partitions.  Where two
equivalent descriptions exist (p-cores vs. residue multisets, runner counts
vs. shifted hat-vectors, delta-pair chains vs. exact permutations) both are
evaluated and required to agree, so a disagreement surfaces as an
:class:`InconsistencyError` instead of a silent wrong answer.

Conventions: the hat-vector of ``lam`` in ``Lambda_{<=n}`` is
``(-|lam|, lam_1, ..., lam_n)`` and the shift is ``(delta, -1, ..., -n)``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .abacus import beta_delta_sequence, gamma_delta, marked_abacus, orbit_min, p_core
from .partcomb import Partition, as_partition, content_sum, new_partition, partitions_of, partitions_up_to

HatVector = tuple[int, ...]


class InconsistencyError(RuntimeError):
    """Two descriptions of the same relation disagreed."""


class SearchExhausted(RuntimeError):
    """A bounded reflection-group search ran out of budget."""


@dataclass(frozen=True)
class BlockPartition:
    """A partition of a label set into blocks.

    Classes are stored sorted by ``Partition.sort_key`` internally and sorted
    among themselves by their first element, so equal partitions compare
    equal regardless of how they were built.
    """

    classes: tuple[tuple[Partition, ...], ...]

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[Partition]]) -> BlockPartition:
        normed = [tuple(sorted(c, key=Partition.sort_key)) for c in classes]
        normed = [c for c in normed if c]
        normed.sort(key=lambda c: c[0].sort_key())
        seen: set[Partition] = set()
        for c in normed:
            if seen.intersection(c):
                raise ValueError("block classes overlap")
            seen.update(c)
        return cls(tuple(normed))

    @classmethod
    def from_invariant(cls, labels: Iterable[Partition], key: Callable[[Partition], Hashable]) -> BlockPartition:
        buckets: dict[Hashable, list[Partition]] = defaultdict(list)
        for lam in labels:
            buckets[key(lam)].append(lam)
        return cls.from_classes(buckets.values())

    @property
    def labels(self) -> set[Partition]:
        return {lam for c in self.classes for lam in c}

    def class_of(self, lam: Partition) -> tuple[Partition, ...]:
        for c in self.classes:
            if lam in c:
                return c
        raise KeyError(lam)

    def same_block(self, lam: Partition, mu: Partition) -> bool:
        return mu in self.class_of(lam)

    def refines(self, other: BlockPartition) -> bool:
        return all(any(set(c) <= set(d) for d in other.classes) for c in self.classes)

    def to_json(self) -> dict:
        return {"classes": [[lam.to_json() for lam in c] for c in self.classes]}

    @classmethod
    def from_json(cls, data: dict) -> BlockPartition:
        return cls.from_classes([[new_partition(x) for x in c] for c in data["classes"]])

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ", ".join(map(str, c)) + "}" for c in self.classes) + "}"


# -- vectors -----------------------------------------------------------------


def hat_vector(lam: Partition, n: int) -> HatVector:
    lam = as_partition(lam)
    return (-lam.degree,) + lam.padded(n)


def rho_shift(n: int, delta: int = 0) -> tuple[int, ...]:
    return (delta,) + tuple(-i for i in range(1, n + 1))


def shifted_hat(lam: Partition, n: int, delta: int) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(hat_vector(lam, n), rho_shift(n, delta)))


def tilde_p(x: Sequence[int], y: Sequence[int], p: int) -> bool:
    """Equality of the multisets of residues modulo ``p``."""
    if len(x) != len(y):
        raise ValueError("sequences must have equal length")
    return Counter(a % p for a in x) == Counter(b % p for b in y)


def _residue_key(x: Iterable[int], p: int) -> tuple[int, ...]:
    return tuple(sorted(a % p for a in x))


# -- symmetric groups ---------------------------------------------------------


def _sym_shifted(lam: Partition, n: int) -> tuple[int, ...]:
    return tuple(a - i for i, a in enumerate(lam.padded(n), 1))


def symgroup_same_block(lam: Partition, mu: Partition, p: int) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.degree != mu.degree:
        raise ValueError("symmetric group blocks compare partitions of equal degree")
    n = lam.degree
    by_core = p_core(lam, p) == p_core(mu, p)
    by_residue = tilde_p(_sym_shifted(lam, n), _sym_shifted(mu, n), p)
    if by_core != by_residue:
        raise InconsistencyError(f"p-core and residue criteria disagree on {lam}, {mu}, p={p}")
    return by_core


def symgroup_blocks(n: int, p: int) -> BlockPartition:
    return BlockPartition.from_invariant(partitions_of(n), lambda lam: p_core(lam, p))


# -- characteristic zero --------------------------------------------------------


def is_delta_pair(mu: Partition, lam: Partition, delta: int) -> bool:
    """``lam`` exceeds ``mu`` by a strip in one row ending at content delta - |mu|."""
    mu, lam = as_partition(mu), as_partition(lam)
    if mu == lam or not lam.contains(mu):
        return False
    rows = [i for i in range(1, len(lam) + 1) if lam.part(i) != mu.part(i)]
    if len(rows) != 1:
        return False
    i = rows[0]
    return lam.part(i) - i == delta - mu.degree


def _pair_up(lam: Partition, delta: int) -> Partition | None:
    """The partition one step above ``lam`` in its delta-pair chain, if any."""
    for i in range(1, len(lam) + 2):
        new = delta - lam.degree + i
        upper = lam.part(i - 1) if i > 1 else new
        if lam.part(i) < new <= upper:
            parts = list(lam.padded(max(i, len(lam))))
            parts[i - 1] = new
            return new_partition(parts)
    return None


def _pair_down(lam: Partition, delta: int) -> Partition | None:
    for i in range(1, len(lam) + 1):
        new = delta - lam.degree + i
        if lam.part(i + 1) <= new < lam.part(i):
            parts = list(lam.parts)
            parts[i - 1] = new
            return new_partition(parts)
    return None


def char0_block_chain(lam: Partition, delta: int, n: int) -> list[Partition]:
    """The chain of consecutive delta-pairs through ``lam`` inside ``Lambda_{<=n}``."""
    lam = as_partition(lam)
    if lam.degree > n:
        raise ValueError(f"{lam} is not in Lambda_<={n}")
    chain = [lam]
    below = _pair_down(lam, delta)
    while below is not None:
        chain.insert(0, below)
        below = _pair_down(below, delta)
    above = _pair_up(lam, delta)
    while above is not None and above.degree <= n:
        chain.append(above)
        above = _pair_up(above, delta)
    for a, b in zip(chain, chain[1:]):
        assert is_delta_pair(a, b, delta), (a, b)
    return chain


def _char0_key(lam: Partition, n: int, delta: int) -> tuple[int, ...]:
    return tuple(sorted(shifted_hat(lam, n, delta)))


def char0_same_block(lam: Partition, mu: Partition, delta: int, n: int) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    by_perm = _char0_key(lam, n, delta) == _char0_key(mu, n, delta)
    by_chain = mu in char0_block_chain(lam, delta, n)
    if by_perm != by_chain:
        raise InconsistencyError(f"chain and permutation criteria disagree on {lam}, {mu}, delta={delta}, n={n}")
    return by_perm


def char0_blocks(n: int, delta: int) -> BlockPartition:
    return BlockPartition.from_invariant(partitions_up_to(n), lambda lam: _char0_key(lam, n, delta))


def char0_blocks_by_chains(n: int, delta: int) -> BlockPartition:
    remaining = set(partitions_up_to(n))
    classes = []
    while remaining:
        lam = min(remaining, key=Partition.sort_key)
        chain = char0_block_chain(lam, delta, n)
        classes.append(chain)
        remaining -= set(chain)
    return BlockPartition.from_classes(classes)


# -- characteristic p, delta in F_p -------------------------------------------------


def jm_scalar_condition(lam: Partition, mu: Partition, delta: int, p: int) -> bool:
    """Vanishing mod p of the difference of the two Z_n eigenvalues."""
    lam, mu = as_partition(lam), as_partition(mu)
    t = lam.degree - mu.degree
    if t < 0:
        return False
    value = t * delta - t * mu.degree - content_sum(lam) + content_sum(mu) - t * (t - 1) // 2
    return value % p == 0


def _check_residue(p: int, delta: int) -> int:
    if delta % p == 0:
        raise ValueError("delta must be nonzero in F_p")
    return delta % p


def _gamma_key(lam: Partition, n: int, p: int, delta: int) -> tuple[int, ...]:
    return gamma_delta(marked_abacus(lam, p, delta, n))


def charp_same_block(lam: Partition, mu: Partition, n: int, p: int, delta: int) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    delta = _check_residue(p, delta)
    for x in (lam, mu):
        if x.degree > n:
            raise ValueError(f"{x} is not in Lambda_<={n}")
    by_runners = _gamma_key(lam, n, p, delta) == _gamma_key(mu, n, p, delta)
    by_residue = tilde_p(beta_delta_sequence(lam, delta, n), beta_delta_sequence(mu, delta, n), p)
    if by_runners != by_residue:
        raise InconsistencyError(f"runner counts and residues disagree on {lam}, {mu}")
    return by_runners


def charp_orbit(lam: Partition, n: int, p: int, delta: int) -> set[Partition]:
    lam = as_partition(lam)
    delta = _check_residue(p, delta)
    key = _gamma_key(lam, n, p, delta)
    return {mu for mu in partitions_up_to(n) if _gamma_key(mu, n, p, delta) == key}


def charp_blocks(n: int, p: int, delta: int) -> BlockPartition:
    delta = _check_residue(p, delta)
    return BlockPartition.from_invariant(partitions_up_to(n), lambda lam: _gamma_key(lam, n, p, delta))


def charp_blocks_by_residues(n: int, p: int, delta: int) -> BlockPartition:
    return BlockPartition.from_invariant(
        partitions_up_to(n), lambda lam: _residue_key(shifted_hat(lam, n, delta), p)
    )


# -- characteristic p, delta outside F_p --------------------------------------------


def nonintegral_same_block(lam: Partition, mu: Partition, p: int) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    return lam.degree == mu.degree and symgroup_same_block(lam, mu, p)


def nonintegral_blocks(n: int, p: int) -> BlockPartition:
    return BlockPartition.from_invariant(partitions_up_to(n), lambda lam: (lam.degree, p_core(lam, p)))


# -- limiting blocks --------------------------------------------------------------


def limiting_same_block(lam: Partition, mu: Partition, p: int, delta: int) -> bool:
    """Membership in the union over m of the orbits at level m.

    Evaluated at ``m = |lam| + |mu| + 2p`` and rechecked on the next ``p``
    levels; a change in the answer there raises instead of returning.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    delta = _check_residue(p, delta)
    start = lam.degree + mu.degree + 2 * p
    answers = {charp_same_block(lam, mu, m, p, delta) for m in range(start, start + p + 1)}
    if len(answers) != 1:
        raise InconsistencyError(f"limiting answer not stable from m={start} for {lam}, {mu}")
    return answers.pop()


def limiting_blocks(n: int, p: int, delta: int) -> BlockPartition:
    """Limiting blocks restricted to the labels of ``Lambda_{<=n}``."""
    delta = _check_residue(p, delta)
    m = 2 * n + 2 * p
    keys = {m2: {lam: _gamma_key(lam, m2, p, delta) for lam in partitions_up_to(n)} for m2 in (m, m + p)}
    if BlockPartition.from_invariant(keys[m], keys[m].get) != BlockPartition.from_invariant(keys[m + p], keys[m + p].get):
        raise InconsistencyError("limiting blocks did not stabilise")
    return BlockPartition.from_invariant(partitions_up_to(n), keys[m].get)


def orbit_minimum(lam: Partition, n: int, p: int, delta: int) -> Partition:
    """Degree-minimal element of the orbit, read off the marked abacus at b = n."""
    return orbit_min(lam, p, delta, n)


# -- reflection groups ---------------------------------------------------------------


def reflect(y: Sequence[int], i: int, j: int, shift: int = 0) -> tuple[int, ...]:
    """Affine reflection ``x - (<x, e_i - e_j> - shift) (e_i - e_j)``."""
    y = list(y)
    d = y[i] - y[j] - shift
    y[i] -= d
    y[j] += d
    return tuple(y)


def shifted_reflect(x: Sequence[int], i: int, j: int, rho: Sequence[int], shift: int = 0) -> tuple[int, ...]:
    """The dot action ``w . x = w(x + rho) - rho`` of a single reflection."""
    y = reflect([a + b for a, b in zip(x, rho)], i, j, shift)
    return tuple(a - b for a, b in zip(y, rho))


def _closure(source: tuple[int, ...], target: tuple[int, ...], p: int | None, r_bound: int, max_states: int) -> bool:
    """Breadth-first search from ``source`` to ``target`` in rho-shifted coordinates.

    Finite case (``p is None``): the orbit is finite and fully explored.
    Affine case: states are confined to the coordinate box spanned by source
    and target; the box closure always contains the target when it lies in
    the orbit (permute residues into place, then translate coordinates
    monotonically), so completing the box search is conclusive.
    """
    lo = min(source + target)
    hi = max(source + target)
    k = len(source)
    shifts = [0] if p is None else [r * p for r in range(-r_bound, r_bound + 1)]
    seen = {source}
    frontier = [source]
    while frontier:
        if target in seen:
            return True
        nxt = []
        for y in frontier:
            for i in range(k):
                for j in range(i + 1, k):
                    for s in shifts:
                        z = reflect(y, i, j, s)
                        if z in seen or (p is not None and not all(lo <= c <= hi for c in z)):
                            continue
                        seen.add(z)
                        nxt.append(z)
            if len(seen) > max_states:
                raise SearchExhausted(f"more than {max_states} states explored")
        frontier = nxt
    return target in seen


def reflection_orbit_equal(
    lam: Partition,
    mu: Partition,
    n: int,
    p: int | None,
    delta: int | None,
    *,
    max_states: int = 200_000,
) -> bool:
    """Is ``mu`` in the (affine) reflection-group dot-orbit of ``lam``?

    ``delta=None`` uses the symmetric-group setting on n-tuples shifted by
    ``(-1, ..., -n)``; otherwise hat-vectors shifted by ``(delta, -1, ..., -n)``.
    ``p=None`` means the finite Weyl group.  Raises :class:`SearchExhausted`
    when the state budget runs out.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if delta is None:
        if lam.degree != mu.degree:
            return False
        source, target = _sym_shifted(lam, n), _sym_shifted(mu, n)
    else:
        source, target = shifted_hat(lam, n, delta), shifted_hat(mu, n, delta)
    r_bound = (lam.degree + mu.degree) // p + 2 if p else 0
    return _closure(source, target, p, r_bound, max_states)
