"""Dense exact linear algebra over a :class:`~.fields.Field`.

Matrices are lists of rows.  Everything is Gaussian elimination; sizes in
this package stay below a few thousand rows and a few hundred columns.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fields import Field, Scalar

Matrix = list[list[Scalar]]
Vector = list[Scalar]


def zeros(F: Field, rows: int, cols: int) -> Matrix:
    return [[F.zero] * cols for _ in range(rows)]


def identity(F: Field, n: int) -> Matrix:
    m = zeros(F, n, n)
    for i in range(n):
        m[i][i] = F.one
    return m


def is_zero_matrix(F: Field, a: Matrix) -> bool:
    return all(F.is_zero(x) for row in a for x in row)


def mat_mul(F: Field, a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    out = zeros(F, len(a), cols)
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if F.is_zero(x):
                continue
            bk = b[k]
            for j in range(cols):
                y = bk[j]
                if not F.is_zero(y):
                    acc[j] = F.add(acc[j], F.mul(x, y))
    return out


def mat_add(F: Field, a: Matrix, b: Matrix) -> Matrix:
    return [[F.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(F: Field, c: Scalar, a: Matrix) -> Matrix:
    return [[F.mul(c, x) for x in row] for row in a]


def mat_sub_scalar(F: Field, a: Matrix, c: Scalar) -> Matrix:
    """``a - c * I``."""
    out = [list(row) for row in a]
    for i in range(len(out)):
        out[i][i] = F.sub(out[i][i], c)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def trace(F: Field, a: Matrix) -> Scalar:
    t = F.zero
    for i in range(len(a)):
        t = F.add(t, a[i][i])
    return t


def mat_equal(F: Field, a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(F.is_zero(F.sub(x, y)) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def is_scalar_matrix(F: Field, a: Matrix, c: Scalar) -> bool:
    return is_zero_matrix(F, mat_sub_scalar(F, a, c))


def rref(F: Field, a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns; the input is not modified."""
    m = [list(row) for row in a]
    pivots: list[int] = []
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if not F.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and not F.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(F: Field, a: Matrix) -> int:
    return len(rref(F, a)[1]) if a else 0


class EchelonBasis:
    """Row space built incrementally, kept in reduced echelon form.

    Feeding rows one at a time keeps memory at ``O(cols^2)`` regardless of
    how many equations arrive.
    """

    def __init__(self, F: Field, cols: int):
        self.F = F
        self.cols = cols
        self.rows: dict[int, Vector] = {}

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        F = self.F
        v = list(v)
        for c, row in self.rows.items():
            if not F.is_zero(v[c]):
                f = v[c]
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence[Scalar]) -> bool:
        F = self.F
        v = self.reduce(v)
        c = next((i for i, x in enumerate(v) if not F.is_zero(x)), None)
        if c is None:
            return False
        inv = F.inv(v[c])
        v = [F.mul(inv, x) for x in v]
        for k, row in self.rows.items():
            if not F.is_zero(row[c]):
                f = row[c]
                self.rows[k] = [F.sub(x, F.mul(f, y)) for x, y in zip(row, v)]
        self.rows[c] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def nullspace(self) -> list[Vector]:
        F = self.F
        free = [c for c in range(self.cols) if c not in self.rows]
        basis = []
        for f in free:
            x = [F.zero] * self.cols
            x[f] = F.one
            for c, row in self.rows.items():
                x[c] = F.neg(row[f])
            basis.append(x)
        return basis


def nullspace(F: Field, a: Matrix | Iterable[Sequence[Scalar]], cols: int | None = None) -> list[Vector]:
    """Basis of ``{x : a x = 0}``; ``a`` may be any iterable of rows."""
    rows = iter(a)
    if cols is None:
        a = list(rows)
        rows = iter(a)
        cols = len(a[0]) if a else 0
    eb = EchelonBasis(F, cols)
    for row in rows:
        eb.add(row)
    return eb.nullspace()


def mat_vec(F: Field, a: Matrix, v: Sequence[Scalar]) -> Vector:
    out = []
    for row in a:
        acc = F.zero
        for x, y in zip(row, v):
            if not F.is_zero(x) and not F.is_zero(y):
                acc = F.add(acc, F.mul(x, y))
        out.append(acc)
    return out


def is_nilpotent(F: Field, a: Matrix) -> bool:
    """``a^d == 0`` with ``d`` the size; squaring reaches a power >= d quickly."""
    d = len(a)
    if d == 0:
        return True
    power, k = a, 1
    while k < d:
        power = mat_mul(F, power, power)
        k *= 2
        if is_zero_matrix(F, power):
            return True
    return is_zero_matrix(F, power)


def solve_left_inverse(F: Field, b: Matrix) -> tuple[list[int], Matrix]:
    """Pick rows ``R`` of a full-column-rank ``b`` with ``b[R]`` invertible; return ``R, b[R]^-1``."""
    cols = len(b[0]) if b else 0
    chosen: list[int] = []
    eb = EchelonBasis(F, cols)
    for i, row in enumerate(b):
        if eb.add(row):
            chosen.append(i)
        if len(chosen) == cols:
            break
    if len(chosen) != cols:
        raise ValueError("matrix does not have full column rank")
    sub = [b[i] for i in chosen]
    aug = [row + e for row, e in zip(sub, identity(F, cols))]
    red, _ = rref(F, aug)
    return chosen, [row[cols:] for row in red]
