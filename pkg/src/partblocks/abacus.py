"""James abacus, p-cores and the delta-marked abacus.

Bead positions come from the beta-sequence ``lam_i - i + b``; position
``pos`` sits on runner ``pos % p`` in row ``pos // p``.  The marked abacus
adds one extra entry ``delta - |lam| + b`` which is not drawn as a bead but
as a marker on top of its runner.  Runner-count vectors of marked abaci
with equal bead count classify the orbits used in :mod:`blocktheory`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partcomb import Partition, as_partition, new_partition

RunnerCounts = tuple[int, ...]


class AbacusError(ValueError):
    pass


@dataclass(frozen=True)
class Abacus:
    p: int
    beads: frozenset[int]

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def runner_counts(self) -> RunnerCounts:
        counts = [0] * self.p
        for pos in self.beads:
            counts[pos % self.p] += 1
        return tuple(counts)

    def partition(self) -> Partition:
        return partition_of(self)


@dataclass(frozen=True)
class MarkedAbacus:
    base: Abacus
    v: int
    delta: int

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def bead_count(self) -> int:
        return self.base.bead_count

    def partition(self) -> Partition:
        return partition_of(self.base)


def _check_p(p: int) -> None:
    if p < 2:
        raise AbacusError(f"need at least two runners, got p={p}")


def beta_sequence(lam: Partition, b: int) -> tuple[int, ...]:
    lam = as_partition(lam)
    if b < lam.degree:
        raise AbacusError(f"bead count b={b} too small for {lam} (need b >= {lam.degree})")
    return tuple(lam.part(i) - i + b for i in range(1, b + 1))


def abacus_of(lam: Partition, p: int, b: int) -> Abacus:
    _check_p(p)
    return Abacus(p, frozenset(beta_sequence(lam, b)))


def partition_of(abacus: Abacus) -> Partition:
    beads = sorted(abacus.beads, reverse=True)
    b = len(beads)
    return new_partition(pos + i - b for i, pos in enumerate(beads, 1))


def gamma(lam: Partition, p: int, b: int) -> RunnerCounts:
    return abacus_of(lam, p, b).runner_counts()


def _compact(counts: RunnerCounts, p: int) -> frozenset[int]:
    return frozenset(r + k * p for r, c in enumerate(counts) for k in range(c))


def p_core(lam: Partition, p: int) -> Partition:
    """Slide every bead as far up its runner as it goes."""
    lam = as_partition(lam)
    _check_p(p)
    b = max(lam.degree, 1)
    return partition_of(Abacus(p, _compact(gamma(lam, p, b), p)))


def is_p_core(lam: Partition, p: int) -> bool:
    return p_core(lam, p) == as_partition(lam)


def _check_delta(p: int, delta: int) -> int:
    if delta % p == 0:
        raise AbacusError("delta must be nonzero modulo p")
    return delta % p


def beta_delta_sequence(lam: Partition, delta: int, b: int) -> tuple[int, ...]:
    lam = as_partition(lam)
    return (delta - lam.degree + b,) + beta_sequence(lam, b)


def marked_abacus(lam: Partition, p: int, delta: int, b: int) -> MarkedAbacus:
    lam = as_partition(lam)
    _check_p(p)
    delta = _check_delta(p, delta)
    base = abacus_of(lam, p, b)
    return MarkedAbacus(base, (delta - lam.degree + b) % p, delta)


def gamma_delta(m: MarkedAbacus) -> RunnerCounts:
    counts = list(m.base.runner_counts())
    counts[m.v] += 1
    return tuple(counts)


def minimal_marker(counts: RunnerCounts) -> int:
    """Rightmost runner carrying the maximal count."""
    top = max(counts)
    return max(i for i, c in enumerate(counts) if c == top)


def orbit_min(lam: Partition, p: int, delta: int, b: int | None = None) -> Partition:
    """Degree-minimal partition sharing the marked runner counts of ``lam``.

    The marker goes on the rightmost runner of maximal count, the remaining
    beads are stacked at the top of their runners.  The answer does not
    depend on ``b`` as long as ``b >= |lam|``.
    """
    lam = as_partition(lam)
    if b is None:
        b = max(lam.degree, 1)
    counts = gamma_delta(marked_abacus(lam, p, delta, b))
    v = minimal_marker(counts)
    beads = list(counts)
    beads[v] -= 1
    result = partition_of(Abacus(p, _compact(tuple(beads), p)))
    # the marker of the result must land on v; guaranteed by sum invariance
    assert (delta - result.degree + b) % p == v
    return result


def satisfies_minimal_conditions(lam: Partition, target: RunnerCounts, p: int, delta: int, b: int) -> bool:
    """Check the three defining conditions of the orbit minimum directly."""
    m = marked_abacus(lam, p, delta, b)
    counts = gamma_delta(m)
    if counts != tuple(target):
        return False
    if m.base.beads != _compact(m.base.runner_counts(), p):
        return False
    return m.v == minimal_marker(counts)


def render_ascii(m: MarkedAbacus | Abacus) -> str:
    """Plain-text abacus: one column per runner, ``o`` bead, ``.`` gap.

    A marked abacus gets a header line with ``v`` above the marker runner.
    """
    base = m.base if isinstance(m, MarkedAbacus) else m
    p = base.p
    rows = (max(base.beads) // p + 1) if base.beads else 0
    lines = []
    if isinstance(m, MarkedAbacus):
        lines.append(" ".join("v" if r == m.v else "." for r in range(p)))
    for row in range(rows):
        lines.append(" ".join("o" if row * p + r in base.beads else "." for r in range(p)))
    return "\n".join(lines)


def parse_ascii(text: str, delta: int | None = None) -> MarkedAbacus | Abacus:
    """Inverse of :func:`render_ascii`.

    The first line is read as a marker header when it contains ``v``;
    ``delta`` is then required to rebuild the :class:`MarkedAbacus`.
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise AbacusError("empty abacus")
    v = None
    if "v" in lines[0]:
        header = lines.pop(0)
        v = header.index("v")
        p = len(header)
    else:
        p = len(lines[0])
    beads = set()
    for row, cells in enumerate(lines):
        if len(cells) != p:
            raise AbacusError(f"row {row} has {len(cells)} cells, expected {p}")
        beads.update(row * p + r for r, c in enumerate(cells) if c == "o")
    base = Abacus(p, frozenset(beads))
    if v is None:
        return base
    if delta is None:
        raise AbacusError("delta is required to parse a marked abacus")
    return MarkedAbacus(base, v, delta % p)


def abacus_json(m: MarkedAbacus | Abacus) -> dict:
    base = m.base if isinstance(m, MarkedAbacus) else m
    out = {"p": base.p, "beads": sorted(base.beads), "gamma": list(base.runner_counts())}
    if isinstance(m, MarkedAbacus):
        out["v"] = m.v
        out["gamma"] = list(gamma_delta(m))
    return out
