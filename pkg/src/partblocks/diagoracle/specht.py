"""Specht modules as spans of polytabloids inside the tabloid permutation module.

Permutations of ``{0..m-1}`` are tuples ``perm`` with ``perm[k]`` the image
of ``k``; they act on tableaux by replacing each entry ``k`` with
``perm[k]``, which is a left action and makes ``perm -> matrix`` a group
homomorphism.  Matrices are integral in the standard polytabloid basis and
are reduced into a field only at the end.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from ..partcomb import Partition, as_partition
from .fields import Field, RationalField
from .linalg import solve_left_inverse

MAX_SPECHT_DEGREE = 5

Perm = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
Tabloid = tuple[frozenset[int], ...]


class SpechtBoundError(ValueError):
    pass


def compose_perms(a: Perm, b: Perm) -> Perm:
    """``a o b``: apply ``b`` first."""
    return tuple(a[x] for x in b)


def invert_perm(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_sign(a: Perm) -> int:
    sign, seen = 1, set()
    for start in range(len(a)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = a[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def transposition(m: int, i: int, j: int) -> Perm:
    p = list(range(m))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def standard_tableaux(lam: Partition) -> list[Tableau]:
    """Standard Young tableaux with entries ``0..m-1``, in a fixed recursive order."""
    lam = as_partition(lam)
    m = lam.degree
    out: list[Tableau] = []

    def rec(rows: list[list[int]], k: int) -> None:
        if k == m:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam.part(i + 1) and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in range(len(lam))], 0)
    return out


def _columns(t: Tableau) -> list[list[int]]:
    return [[row[c] for row in t if c < len(row)] for c in range(len(t[0]))] if t else []


def _tabloid(t: Tableau) -> Tabloid:
    return tuple(frozenset(r) for r in t)


def act_on_tableau(perm: Perm, t: Tableau) -> Tableau:
    return tuple(tuple(perm[x] for x in row) for row in t)


def polytabloid(t: Tableau, m: int) -> dict[Tabloid, int]:
    """``sum_{c in column group} sign(c) {c.t}``."""
    cols = _columns(t)
    out: dict[Tabloid, int] = {}
    col_perms = [list(permutations(col)) for col in cols]
    for choice in product(*col_perms):
        perm = list(range(m))
        for col, img in zip(cols, choice):
            for a, b in zip(col, img):
                perm[a] = b
        perm = tuple(perm)
        key = _tabloid(act_on_tableau(perm, t))
        out[key] = out.get(key, 0) + perm_sign(perm)
    return {k: v for k, v in out.items() if v}


class SpechtModule:
    """Integral Specht module ``S^lam`` with matrices in the standard polytabloid basis."""

    def __init__(self, lam: Partition, max_degree: int = MAX_SPECHT_DEGREE):
        lam = as_partition(lam)
        if lam.degree > max_degree:
            raise SpechtBoundError(f"|{lam}| = {lam.degree} exceeds the Specht bound {max_degree}")
        self.shape = lam
        self.m = lam.degree
        self.tableaux = standard_tableaux(lam)
        tabloids: dict[Tabloid, int] = {}
        vectors = [polytabloid(t, self.m) for t in self.tableaux]
        for v in vectors:
            for k in v:
                tabloids.setdefault(k, len(tabloids))
        self._tabloid_index = tabloids
        self.basis_vectors = [self._dense(v) for v in vectors]
        Q = RationalField()
        cols = [list(x) for x in zip(*self.basis_vectors)] if self.basis_vectors else []
        rows, inv = solve_left_inverse(Q, [[Fraction(x) for x in r] for r in cols])
        self._pivot_rows = rows
        self._pivot_inverse = inv
        self._cache: dict[Perm, list[list[int]]] = {}

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    def _dense(self, v: dict[Tabloid, int]) -> list[int]:
        out = [0] * len(self._tabloid_index)
        for k, c in v.items():
            idx = self._tabloid_index.get(k)
            if idx is None:
                raise AssertionError("tabloid outside the span of standard polytabloids")
            out[idx] = c
        return out

    def coordinates(self, tabloid_vector: Sequence[int]) -> list[int]:
        """Standard-basis coordinates of a vector known to lie in the module."""
        sub = [tabloid_vector[r] for r in self._pivot_rows]
        coords = [sum(Fraction(a) * b for a, b in zip(row, sub)) for row in self._pivot_inverse]
        if any(c.denominator != 1 for c in coords):
            raise AssertionError("non-integral Specht coordinates")
        coords = [int(c) for c in coords]
        rebuilt = [sum(c * v[i] for c, v in zip(coords, self.basis_vectors)) for i in range(len(tabloid_vector))]
        if rebuilt != list(tabloid_vector):
            raise AssertionError("vector is not in the Specht module")
        return coords

    def matrix(self, perm: Sequence[int]) -> list[list[int]]:
        """Integral matrix of ``perm``; column ``a`` holds the coordinates of ``perm . e_a``."""
        perm = tuple(perm)
        if len(perm) != self.m:
            raise ValueError(f"permutation of length {len(perm)} for S_{self.m}")
        if perm not in self._cache:
            cols = []
            for t in self.tableaux:
                image = polytabloid(act_on_tableau(perm, t), self.m)
                cols.append(self.coordinates(self._dense(image)))
            self._cache[perm] = [list(r) for r in zip(*cols)] if cols else []
        return self._cache[perm]

    def generator_matrices(self) -> dict[str, list[list[int]]]:
        return {f"s_{i}": self.matrix(transposition(self.m, i - 1, i)) for i in range(1, self.m)}

    def inner_product(self, perm_left: Perm, a: int, perm_right: Perm, b: int) -> int:
        """``<perm_left . e_a, perm_right . e_b>`` in tabloid coordinates."""
        va = self._dense(polytabloid(act_on_tableau(perm_left, self.tableaux[a]), self.m))
        vb = self._dense(polytabloid(act_on_tableau(perm_right, self.tableaux[b]), self.m))
        return sum(x * y for x, y in zip(va, vb))

    @lru_cache(maxsize=None)
    def form_with(self, perm: Perm) -> tuple[tuple[int, ...], ...]:
        """Matrix ``G[a][b] = <e_a, perm . e_b>``."""
        ident = tuple(range(self.m))
        return tuple(tuple(self.inner_product(ident, a, perm, b) for b in range(self.dimension)) for a in range(self.dimension))


@lru_cache(maxsize=None)
def specht_module(lam: Partition, max_degree: int = MAX_SPECHT_DEGREE) -> SpechtModule:
    return SpechtModule(as_partition(lam), max_degree)


def specht_rep(lam: Partition, field: Field | None = None, max_degree: int = MAX_SPECHT_DEGREE):
    """``S^lam`` as a :class:`~.cellmodules.MatrixRep` of ``s_1 .. s_{m-1}`` over ``field``."""
    from .cellmodules import MatrixRep

    F = field if field is not None else RationalField()
    S = specht_module(as_partition(lam), max_degree)
    mats = {name: [[F.from_int(x) for x in row] for row in m] for name, m in S.generator_matrices().items()}
    return MatrixRep(F, S.dimension, [str(t) for t in S.tableaux], mats)
