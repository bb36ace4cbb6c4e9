"""Exact base fields: the rationals, prime fields and their quadratic extensions.

Scalars are plain Python values interpreted by a field object: ``Fraction``
for the rationals, ``int`` in ``[0, p)`` for F_p, and ``(a, b)`` meaning
``a + b*x`` for F_{p^2}.  Keeping scalars raw makes the dense elimination
loops in :mod:`linalg` cheap; the field object carries all arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

Scalar = Any


class FieldError(ArithmeticError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


class Field:
    """Interface shared by the concrete fields below."""

    name: str
    characteristic: int
    zero: Scalar
    one: Scalar

    def from_int(self, k: int) -> Scalar:
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def is_zero(self, a: Scalar) -> bool:
        return a == self.zero

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def pow(self, a: Scalar, k: int) -> Scalar:
        if k < 0:
            return self.pow(self.inv(a), -k)
        out, base = self.one, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def elements(self) -> Iterator[Scalar]:
        raise FieldError(f"{self.name} is infinite")

    @property
    def is_finite(self) -> bool:
        return self.characteristic > 0

    def coerce(self, value: Any) -> Scalar:
        """Accept an ``int`` (mapped through the prime ring) or a native scalar."""
        if isinstance(value, int):
            return self.from_int(value)
        return value

    def to_json(self, a: Scalar) -> Any:
        return a

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True, repr=False)
class RationalField(Field):
    name: str = "QQ"
    characteristic: int = 0
    zero: Scalar = Fraction(0)
    one: Scalar = Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def coerce(self, value: Any) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def to_json(self, a: Fraction) -> Any:
        a = Fraction(a)
        return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


@dataclass(frozen=True, repr=False)
class PrimeField(Field):
    p: int = 2
    name: str = field(init=False)
    characteristic: int = field(init=False)
    zero: Scalar = 0
    one: Scalar = 1

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        object.__setattr__(self, "name", f"GF({self.p})")
        object.__setattr__(self, "characteristic", self.p)

    def from_int(self, k: int) -> int:
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))


def least_irreducible_quadratic(p: int) -> tuple[int, int]:
    """Coefficients ``(c1, c0)`` of the lexicographically least irreducible ``x^2 + c1 x + c0``."""
    for c1 in range(p):
        for c0 in range(p):
            if all((r * r + c1 * r + c0) % p for r in range(p)):
                return c1, c0
    raise FieldError(f"no irreducible quadratic over GF({p})")  # pragma: no cover


@dataclass(frozen=True, repr=False)
class QuadraticExtensionField(Field):
    """GF(p^2) as pairs ``(a, b) = a + b x`` modulo a fixed irreducible quadratic."""

    p: int = 2
    name: str = field(init=False)
    characteristic: int = field(init=False)
    modulus: tuple[int, int] = field(init=False)
    zero: Scalar = (0, 0)
    one: Scalar = (1, 0)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        object.__setattr__(self, "name", f"GF({self.p}^2)")
        object.__setattr__(self, "characteristic", self.p)
        object.__setattr__(self, "modulus", least_irreducible_quadratic(self.p))

    @property
    def generator(self) -> tuple[int, int]:
        return (0, 1)

    def from_int(self, k: int) -> tuple[int, int]:
        return (k % self.p, 0)

    def coerce(self, value: Any) -> tuple[int, int]:
        if isinstance(value, int):
            return self.from_int(value)
        a, b = value
        return (a % self.p, b % self.p)

    def add(self, a, b):
        p = self.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)

    def sub(self, a, b):
        p = self.p
        return ((a[0] - b[0]) % p, (a[1] - b[1]) % p)

    def neg(self, a):
        return (-a[0] % self.p, -a[1] % self.p)

    def mul(self, a, b):
        # x^2 = -c1 x - c0
        p = self.p
        c1, c0 = self.modulus
        lo = a[0] * b[0]
        mid = a[0] * b[1] + a[1] * b[0]
        hi = a[1] * b[1]
        return ((lo - c0 * hi) % p, (mid - c1 * hi) % p)

    def norm(self, a) -> int:
        # a * conj(a) where conj(x) = -c1 - x
        c1, c0 = self.modulus
        return (a[0] * a[0] - c1 * a[0] * a[1] + c0 * a[1] * a[1]) % self.p

    def inv(self, a):
        nrm = self.norm(a)
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero")
        c1, _ = self.modulus
        ninv = pow(nrm, self.p - 2, self.p)
        conj = ((a[0] - c1 * a[1]) % self.p, -a[1] % self.p)
        return (conj[0] * ninv % self.p, conj[1] * ninv % self.p)

    def in_prime_field(self, a) -> bool:
        return a[1] % self.p == 0

    def elements(self) -> Iterator[tuple[int, int]]:
        return ((a, b) for b in range(self.p) for a in range(self.p))

    def to_json(self, a) -> Any:
        return [a[0], a[1]]


def make_field(spec: str | int | None) -> Field:
    """``None``/``0``/``"QQ"`` -> rationals, ``p`` -> GF(p), ``"p^2"`` -> GF(p^2)."""
    if spec in (None, 0, "0", "QQ", "Q"):
        return RationalField()
    if isinstance(spec, str) and "^" in spec:
        base, exp = spec.split("^")
        if exp != "2":
            raise FieldError("only quadratic extensions are supported")
        return QuadraticExtensionField(int(base))
    return PrimeField(int(spec))
