"""The center of ``P_n(delta)`` and cell-blocks as fibers of central characters.

A central element commutes with every permutation diagram, so its
coefficients are constant on conjugation orbits of diagrams.  The center is
therefore the set of orbit-sum combinations that also commute with the
``p_i`` and ``p_{i,j}``, a small nullspace problem.  Each central element acts
on a cell module with a single generalized eigenvalue; the vector of those
eigenvalues over a basis of the center separates blocks.
"""

from __future__ import annotations

import os
from itertools import permutations
from typing import Any

from ..blocktheory import BlockPartition
from ..partcomb import Partition, partitions_up_to
from .algebra import AlgebraElement, PartitionAlgebra
from .cellmodules import CellModule
from .diagrams import SetPartitionDiagram, all_diagrams, conjugate, generators
from .fields import Field, RationalField, Scalar
from .linalg import EchelonBasis, is_nilpotent, mat_sub_scalar, trace

DEFAULT_ORACLE_MAX_N = 3
ENV_ORACLE_MAX_N = "PARTBLOCKS_ORACLE_MAX_N"


class OracleBoundError(ValueError):
    pass


class CentralCharacterError(RuntimeError):
    """A central element did not act with exactly one generalized eigenvalue."""


def oracle_max_n(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(ENV_ORACLE_MAX_N, DEFAULT_ORACLE_MAX_N))


def _check_bound(n: int, max_n: int | None) -> None:
    bound = oracle_max_n(max_n)
    if n > bound:
        raise OracleBoundError(f"n={n} exceeds the oracle bound {bound}; raise it with {ENV_ORACLE_MAX_N} or max_n")


def conjugation_orbits(n: int) -> list[list[SetPartitionDiagram]]:
    """Orbits of diagrams under simultaneous relabelling of both rows, in enumeration order."""
    seen: set[SetPartitionDiagram] = set()
    perms = list(permutations(range(n)))
    orbits = []
    for d in all_diagrams(n):
        if d in seen:
            continue
        orbit = sorted({conjugate(d, w) for w in perms}, key=lambda x: x.labels)
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def center_basis(n: int, delta: Any, field: Field | None = None, max_n: int | None = None) -> list[AlgebraElement]:
    _check_bound(n, max_n)
    A = PartitionAlgebra(n, delta, field)
    F = A.field
    orbits = conjugation_orbits(n)
    sums = [A.element({d: F.one for d in orb}) for orb in orbits]
    gens = [A.diagram(d) for name, d in generators(n).items() if name.startswith("p_")]
    eb = EchelonBasis(F, len(sums))
    for g in gens:
        comms = [z.commutator(g).terms for z in sums]
        rows: dict[SetPartitionDiagram, list[Scalar]] = {}
        for k, terms in enumerate(comms):
            for d, c in terms.items():
                rows.setdefault(d, [F.zero] * len(sums))[k] = c
        for d in sorted(rows, key=lambda x: x.labels):
            eb.add(rows[d])
    basis = []
    for v in eb.nullspace():
        z = A.zero()
        for c, s in zip(v, sums):
            if not F.is_zero(c):
                z = z + s * c
        basis.append(z)
    return basis


def generalized_eigenvalue(F: Field, matrix: list[list[Scalar]]) -> Scalar:
    """The unique ``c`` with ``matrix - c I`` nilpotent."""
    dim = len(matrix)
    if F.is_finite:
        hits = [c for c in F.elements() if is_nilpotent(F, mat_sub_scalar(F, matrix, c))]
        if len(hits) != 1:
            raise CentralCharacterError(f"expected one generalized eigenvalue, found {len(hits)}")
        return hits[0]
    c = F.div(trace(F, matrix), F.from_int(dim))
    if not is_nilpotent(F, mat_sub_scalar(F, matrix, c)):
        raise CentralCharacterError("trace/dim is not a generalized eigenvalue")
    return c


def central_character_vector(
    z_basis: list[AlgebraElement], lam: Partition, n: int, delta: Any, field: Field | None = None
) -> tuple[Scalar, ...]:
    cm = CellModule(lam, n, delta, field)
    return tuple(generalized_eigenvalue(cm.field, cm.act_element(z)) for z in z_basis)


def central_characters(n: int, delta: Any, field: Field | None = None, max_n: int | None = None) -> dict[Partition, tuple]:
    F = field if field is not None else RationalField()
    z_basis = center_basis(n, delta, F, max_n)
    return {lam: central_character_vector(z_basis, lam, n, delta, F) for lam in partitions_up_to(n)}


def oracle_cell_blocks(n: int, delta: Any, field: Field | None = None, max_n: int | None = None) -> BlockPartition:
    chars = central_characters(n, delta, field, max_n)
    return BlockPartition.from_invariant(chars, chars.__getitem__)
