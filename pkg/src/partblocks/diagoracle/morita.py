"""The corner-algebra embedding ``x -> xi iota(x) xi`` of ``P_n(delta - 1)``.

``iota`` appends a vertical strand ``{n+1, (n+1)bar}`` and
``xi = prod_i (1 - p_{i,n+1})`` lives in ``P_{n+1}(delta)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any

from .algebra import AlgebraElement, PartitionAlgebra
from .diagrams import SetPartitionDiagram, all_diagrams, generators
from .fields import Field, RationalField
from .linalg import EchelonBasis


@dataclass(frozen=True)
class MoritaReport:
    n: int
    xi_idempotent: bool
    unit: bool
    multiplicative: bool
    injective: bool
    in_half_algebra: bool
    p_relation: bool

    @property
    def ok(self) -> bool:
        return all(v for k, v in asdict(self).items() if k != "n")


class MoritaEmbedding:
    def __init__(self, n: int, delta: Any, field: Field | None = None):
        self.n = n
        self.field = field if field is not None else RationalField()
        F = self.field
        self.big = PartitionAlgebra(n + 1, delta, F)
        self.small = PartitionAlgebra(n, F.sub(F.coerce(delta), F.one), F)
        one = self.big.one()
        xi = one
        for i in range(1, n + 1):
            xi = xi * (one - self.big.p_pair(i, n + 1))
        self.xi = xi

    def iota(self, x: AlgebraElement) -> AlgebraElement:
        return self.big.element({d.extend(): c for d, c in x.terms.items()})

    def theta(self, x: AlgebraElement) -> AlgebraElement:
        return self.xi * self.iota(x) * self.xi

    def report(self) -> MoritaReport:
        n, F = self.n, self.field
        small = self.small
        gens = {name: small.diagram(d) for name, d in generators(n).items()}
        mult = True
        for x in gens.values():
            for y in gens.values():
                if self.theta(x * y) != self.theta(x) * self.theta(y):
                    mult = False
        images = [self.theta(small.diagram(d)) for d in all_diagrams(n)]
        big_index = {d: i for i, d in enumerate(all_diagrams(n + 1))}
        eb = EchelonBasis(F, len(big_index))
        for img in images:
            row = [F.zero] * len(big_index)
            for d, c in img.terms.items():
                row[big_index[d]] = c
            eb.add(row)
        injective = eb.rank == len(images)
        half = all(d.labels[n] == d.labels[2 * n + 1] for img in images for d in img.terms)
        rel = True
        dm1 = small.delta
        for i in range(1, n + 1):
            e = self.theta(small.p(i))
            if e * e != e * dm1:
                rel = False
        return MoritaReport(
            n=n,
            xi_idempotent=self.xi * self.xi == self.xi,
            unit=self.theta(small.one()) == self.xi,
            multiplicative=mult,
            injective=injective,
            in_half_algebra=half,
            p_relation=rel,
        )


def morita_report(n: int, delta: Any, field: Field | None = None) -> MoritaReport:
    return MoritaEmbedding(n, delta, field).report()


def morita_check(n: int, delta: Any, field: Field | None = None) -> bool:
    return morita_report(n, delta, field).ok
