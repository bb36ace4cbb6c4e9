"""Half diagrams and the cell modules ``V(n, m) (x)_{S_m} S^lam``.

For ``lam`` of degree ``m = n - t`` the half diagrams ``I(n, m)`` have
exactly ``m`` propagating blocks and southern nodes ``1..t`` as singletons,
so each of the southern nodes ``t+1..n`` lies in its own propagating block.
An orbit of the right ``S_m`` action is fixed by the northern set partition
together with the choice of propagating blocks; the representative joins
those blocks, taken in order of least element, to ``t+1, ..., n``.  A half
diagram ``w`` then factors as ``rep(w) * d_sigma`` and ``w (x) s`` equals
``rep(w) (x) sigma.s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Any, Sequence

from ..partcomb import Partition, as_partition
from .algebra import AlgebraElement, PartitionAlgebra
from .diagrams import SetPartitionDiagram, compose, generators, set_partitions_rgs
from .fields import Field, RationalField, Scalar
from .linalg import Matrix, identity, mat_add, mat_mul, mat_scale, rank, zeros
from .specht import MAX_SPECHT_DEGREE, SpechtModule, specht_module

OrbitKey = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class MatrixRep:
    """Matrices for a fixed list of algebra generators, acting on column vectors."""

    field: Field
    dimension: int
    labels: list[str]
    generator_matrices: dict[str, Matrix] = field(default_factory=dict)

    def matrix(self, name: str) -> Matrix:
        return self.generator_matrices[name]


def _half_diagram(n: int, t: int, north: Sequence[int], chosen: Sequence[int], order: Sequence[int]) -> SetPartitionDiagram:
    """North partition ``north``; block ``chosen[order[i]]`` joined to southern node ``t+1+i``."""
    k = max(north) + 1 if north else 0
    south = [k + i for i in range(t)] + [chosen[order[i]] for i in range(n - t)]
    return SetPartitionDiagram.from_labels(n, list(north) + south)


@dataclass(frozen=True)
class HalfDiagramBasis:
    n: int
    t: int
    representatives: tuple[SetPartitionDiagram, ...]
    index: dict[OrbitKey, int] = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return self.n - self.t

    @property
    def rank(self) -> int:
        return len(self.representatives)

    def diagrams(self) -> list[SetPartitionDiagram]:
        """All of ``I(n, m)``: every representative under every reordering of its strands."""
        out = []
        for rep in self.representatives:
            north, chosen = self.orbit_key(rep)
            for order in permutations(range(self.m)):
                out.append(_half_diagram(self.n, self.t, north, chosen, order))
        return out

    def orbit_key(self, w: SetPartitionDiagram) -> OrbitKey:
        north, _ = self.factor(w)
        return north

    def factor(self, w: SetPartitionDiagram) -> tuple[OrbitKey, tuple[int, ...]]:
        """Orbit key and the permutation ``sigma`` (0-based) with ``w = rep * d_sigma``."""
        n, t = self.n, self.t
        north = w.north
        # block ids in the northern RGS are already in order of least element
        attached = [w.south[t + i] for i in range(self.m)]
        chosen = tuple(sorted(attached))
        sigma = tuple(chosen.index(b) for b in attached)
        return (north, chosen), sigma

    def contains(self, w: SetPartitionDiagram) -> bool:
        t = self.t
        if w.propagating_count != self.m:
            return False
        south = w.south
        if any(south.count(south[i]) != 1 or south[i] in w.north for i in range(t)):
            return False
        return len(set(south[t:])) == self.m and set(south[t:]) <= set(w.north)


@lru_cache(maxsize=None)
def half_diagram_basis(n: int, t: int) -> HalfDiagramBasis:
    if not 0 <= t <= n:
        raise ValueError(f"t must lie in 0..{n}")
    m = n - t
    reps = []
    index: dict[OrbitKey, int] = {}
    for north in set_partitions_rgs(n):
        k = max(north) + 1 if north else 0
        for chosen in combinations(range(k), m):
            index[(north, chosen)] = len(reps)
            reps.append(_half_diagram(n, t, north, chosen, range(m)))
    return HalfDiagramBasis(n, t, tuple(reps), index)


class CellModule:
    """``Delta_lam(n; delta)`` with basis ``(orbit representative, standard tableau)``."""

    def __init__(self, lam: Partition, n: int, delta: Any, field: Field | None = None, max_specht: int = MAX_SPECHT_DEGREE):
        lam = as_partition(lam)
        if lam.degree > n:
            raise ValueError(f"{lam} is not in Lambda_<={n}")
        self.shape = lam
        self.n = n
        self.t = n - lam.degree
        self.field = field if field is not None else RationalField()
        self.delta = self.field.coerce(delta)
        self.algebra = PartitionAlgebra(n, self.delta, self.field)
        self.half = half_diagram_basis(n, self.t)
        self.specht: SpechtModule = specht_module(lam, max_specht)
        self._specht_field: dict[tuple[int, ...], Matrix] = {}
        self._cache: dict[SetPartitionDiagram, Matrix] = {}

    @property
    def dimension(self) -> int:
        return self.half.rank * self.specht.dimension

    def labels(self) -> list[str]:
        return [f"{rep} (x) {tab}" for rep in self.half.representatives for tab in self.specht.tableaux]

    def _specht_matrix(self, sigma: tuple[int, ...]) -> Matrix:
        if sigma not in self._specht_field:
            F = self.field
            self._specht_field[sigma] = [[F.from_int(x) for x in row] for row in self.specht.matrix(sigma)]
        return self._specht_field[sigma]

    def act(self, x: SetPartitionDiagram) -> Matrix:
        """Matrix of a single diagram acting on the left."""
        if x in self._cache:
            return self._cache[x]
        F = self.field
        ds = self.specht.dimension
        out = zeros(F, self.dimension, self.dimension)
        for r, rep in enumerate(self.half.representatives):
            z, loops = compose(x, rep)
            if z.propagating_count < self.half.m:
                continue
            key, sigma = self.half.factor(z)
            r2 = self.half.index[key]
            coeff = self.algebra.delta_power(loops)
            sm = self._specht_matrix(sigma)
            for a in range(ds):
                col = r * ds + a
                for b in range(ds):
                    v = sm[b][a]
                    if not F.is_zero(v):
                        out[r2 * ds + b][col] = F.add(out[r2 * ds + b][col], F.mul(coeff, v))
        self._cache[x] = out
        return out

    def act_element(self, elem: AlgebraElement) -> Matrix:
        F = self.field
        out = zeros(F, self.dimension, self.dimension)
        for d, c in elem.terms.items():
            out = mat_add(F, out, mat_scale(F, c, self.act(d)))
        return out

    def rep(self) -> MatrixRep:
        mats = {name: self.act(d) for name, d in generators(self.n).items()}
        return MatrixRep(self.field, self.dimension, self.labels(), mats)

    def gram_matrix(self) -> Matrix:
        """``<u (x) a, v (x) b> = delta^r <e_a, sigma e_b>`` when ``u* v`` keeps all ``m`` strands."""
        F = self.field
        ds = self.specht.dimension
        m = self.half.m
        dim = self.dimension
        g = zeros(F, dim, dim)
        reps = self.half.representatives
        for r, u in enumerate(reps):
            uf = u.flip()
            for s, v in enumerate(reps):
                z, loops = compose(uf, v)
                if z.propagating_count < m:
                    continue
                sigma = _middle_permutation(z, self.t)
                form = self.specht.form_with(sigma)
                coeff = self.algebra.delta_power(loops)
                for a in range(ds):
                    for b in range(ds):
                        if form[a][b]:
                            g[r * ds + a][s * ds + b] = F.mul(coeff, F.from_int(form[a][b]))
        return g


def _middle_permutation(z: SetPartitionDiagram, t: int) -> tuple[int, ...]:
    """For ``z`` with strands ``t+1..n`` propagating: ``sigma[i] = j`` when south ``t+1+i`` meets north ``t+1+j``."""
    n = z.n
    m = n - t
    where = {z.north[t + j]: j for j in range(m)}
    return tuple(where[z.south[t + i]] for i in range(m))


def cell_module_rep(lam: Partition, n: int, delta: Any, field: Field | None = None) -> MatrixRep:
    return CellModule(lam, n, delta, field).rep()


def cell_module(lam: Partition, n: int, delta: Any, field: Field | None = None) -> CellModule:
    return CellModule(lam, n, delta, field)


def gram_rank(lam: Partition, n: int, delta: Any, field: Field | None = None) -> int:
    cm = CellModule(lam, n, delta, field)
    return rank(cm.field, cm.gram_matrix())


def regular_dimension_check(n: int) -> tuple[int, int]:
    """``(Bell(2n), sum_t rank_t^2 (n-t)!)`` for the cellular dimension count."""
    from math import factorial

    from .diagrams import bell

    total = sum(half_diagram_basis(n, t).rank ** 2 * factorial(n - t) for t in range(n + 1))
    return bell(2 * n), total
