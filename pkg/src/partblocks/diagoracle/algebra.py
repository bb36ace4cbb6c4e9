"""The partition algebra as sparse linear combinations of diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .diagrams import (
    SetPartitionDiagram,
    all_diagrams,
    compose,
    p_pair_diagram,
    p_single_diagram,
    s_diagram,
)
from .fields import Field, RationalField, Scalar


class PartitionAlgebra:
    """``P_n(delta)`` over ``field``; ``delta`` may be any scalar of the field."""

    def __init__(self, n: int, delta: Any, field: Field | None = None):
        self.n = n
        self.field = field if field is not None else RationalField()
        self.delta = self.field.coerce(delta)
        self._delta_powers = [self.field.one]

    def same_as(self, other: PartitionAlgebra) -> bool:
        """Equal parameters; elements of such algebras may be mixed freely."""
        return self is other or (self.n == other.n and self.field == other.field and self.delta == other.delta)

    def __repr__(self) -> str:
        return f"PartitionAlgebra(n={self.n}, delta={self.delta!r}, field={self.field!r})"

    def delta_power(self, k: int) -> Scalar:
        while len(self._delta_powers) <= k:
            self._delta_powers.append(self.field.mul(self._delta_powers[-1], self.delta))
        return self._delta_powers[k]

    def dimension(self) -> int:
        return len(all_diagrams(self.n))

    def basis(self) -> tuple[SetPartitionDiagram, ...]:
        return all_diagrams(self.n)

    # element constructors
    def element(self, terms: Mapping[SetPartitionDiagram, Scalar] | None = None) -> AlgebraElement:
        F = self.field
        clean = {d: F.coerce(c) for d, c in (terms or {}).items()}
        return AlgebraElement(self, {d: c for d, c in clean.items() if not F.is_zero(c)})

    def diagram(self, d: SetPartitionDiagram, coeff: Scalar | None = None) -> AlgebraElement:
        if d.n != self.n:
            raise ValueError("diagram size does not match the algebra")
        return self.element({d: self.field.one if coeff is None else coeff})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.diagram(SetPartitionDiagram.identity(self.n))

    def scalar(self, c: Any) -> AlgebraElement:
        return self.one() * self.field.coerce(c)

    def s(self, i: int, j: int | None = None) -> AlgebraElement:
        """``s(i)`` is the adjacent transposition ``s_{i,i+1}``."""
        return self.diagram(s_diagram(self.n, i, i + 1 if j is None else j))

    def p_pair(self, i: int, j: int) -> AlgebraElement:
        return self.diagram(p_pair_diagram(self.n, i, j))

    def p(self, i: int) -> AlgebraElement:
        return self.diagram(p_single_diagram(self.n, i))

    def mul_diagrams(self, x: SetPartitionDiagram, y: SetPartitionDiagram) -> tuple[SetPartitionDiagram, Scalar]:
        z, loops = compose(x, y)
        return z, self.delta_power(loops)


@dataclass
class AlgebraElement:
    algebra: PartitionAlgebra
    terms: dict[SetPartitionDiagram, Scalar] = field(default_factory=dict)

    @property
    def F(self) -> Field:
        return self.algebra.field

    def _same(self, other: AlgebraElement) -> None:
        if not self.algebra.same_as(other.algebra):
            raise ValueError("elements of different algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        F = self.F
        out = dict(self.terms)
        for d, c in other.terms.items():
            v = F.add(out.get(d, F.zero), c)
            if F.is_zero(v):
                out.pop(d, None)
            else:
                out[d] = v
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {d: self.F.neg(c) for d, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other: AlgebraElement | Any) -> AlgebraElement:
        F = self.F
        if not isinstance(other, AlgebraElement):
            c = F.coerce(other)
            if F.is_zero(c):
                return self.algebra.zero()
            return AlgebraElement(self.algebra, {d: F.mul(v, c) for d, v in self.terms.items()})
        self._same(other)
        out: dict[SetPartitionDiagram, Scalar] = {}
        mul = self.algebra.mul_diagrams
        for x, a in self.terms.items():
            for y, b in other.terms.items():
                z, w = mul(x, y)
                out[z] = F.add(out.get(z, F.zero), F.mul(F.mul(a, b), w))
        return AlgebraElement(self.algebra, {d: c for d, c in out.items() if not F.is_zero(c)})

    def __rmul__(self, other: Any) -> AlgebraElement:
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.same_as(other.algebra) and (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: SetPartitionDiagram) -> Scalar:
        return self.terms.get(d, self.F.zero)

    def flip(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {d.flip(): c for d, c in self.terms.items()})

    def filter(self, keep) -> AlgebraElement:
        return AlgebraElement(self.algebra, {d: c for d, c in self.terms.items() if keep(d)})

    def top_quotient(self) -> AlgebraElement:
        """Image modulo the span of diagrams with fewer than ``n`` propagating blocks."""
        n = self.algebra.n
        return self.filter(lambda d: d.propagating_count == n)

    def commutator(self, other: AlgebraElement) -> AlgebraElement:
        return self * other - other * self

    def __hash__(self):  # mutable-looking value type; identity hashing is wrong
        raise TypeError("AlgebraElement is unhashable")

    def support_size(self) -> int:
        return len(self.terms)


def product(algebra: PartitionAlgebra, factors: Iterable[AlgebraElement]) -> AlgebraElement:
    out = algebra.one()
    for f in factors:
        out = out * f
    return out


def e_idempotent(t: int, n: int, delta: Any, field: Field | None = None) -> AlgebraElement:
    """``delta^-t p_1 p_2 ... p_t``."""
    A = PartitionAlgebra(n, delta, field)
    if not 0 <= t <= n:
        raise ValueError(f"t must lie in 0..{n}")
    if A.field.is_zero(A.delta):
        raise ZeroDivisionError("delta must be invertible")
    return product(A, (A.p(i) for i in range(1, t + 1))) * A.field.pow(A.delta, -t)
