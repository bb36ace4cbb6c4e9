from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import GF, QQ, Matrix
from sympy.polys.matrices import DomainMatrix

from partblocks.diagoracle.fields import (
    FieldError,
    PrimeField,
    QuadraticExtensionField,
    RationalField,
    is_prime,
    least_irreducible_quadratic,
    make_field,
)
from partblocks.diagoracle.linalg import (
    EchelonBasis,
    identity,
    is_nilpotent,
    is_scalar_matrix,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve_left_inverse,
    trace,
)

FIELDS = [RationalField(), PrimeField(2), PrimeField(3), PrimeField(5), QuadraticExtensionField(2), QuadraticExtensionField(3)]


def test_primality():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_quadratic_moduli_are_lexicographically_least():
    # x^2+x+1 over GF(2); x^2+1 over GF(3); x^2+2 over GF(5)
    assert least_irreducible_quadratic(2) == (1, 1)
    assert least_irreducible_quadratic(3) == (0, 1)
    assert least_irreducible_quadratic(5) == (0, 2)


def test_make_field():
    assert isinstance(make_field(None), RationalField)
    assert isinstance(make_field("QQ"), RationalField)
    assert make_field(5).name == "GF(5)"
    assert make_field("2^2").name == "GF(2^2)"
    with pytest.raises(FieldError):
        make_field("2^3")
    with pytest.raises(FieldError):
        PrimeField(4)


@pytest.mark.parametrize("F", FIELDS[1:], ids=lambda F: F.name)
def test_finite_field_axioms(F):
    elems = list(F.elements())
    assert len(elems) in (2, 3, 5, 4, 9)
    for a in elems:
        assert F.add(a, F.neg(a)) == F.zero
        if not F.is_zero(a):
            assert F.mul(a, F.inv(a)) == F.one
        for b in elems:
            assert F.mul(a, b) == F.mul(b, a)
            for c in elems:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_extension_multiplicative_group_is_cyclic(p):
    F = QuadraticExtensionField(p)
    orders = []
    for a in F.elements():
        if F.is_zero(a):
            continue
        k, x = 1, a
        while x != F.one:
            x = F.mul(x, a)
            k += 1
        orders.append(k)
    assert max(orders) == p * p - 1


def test_rational_json():
    Q = RationalField()
    assert Q.to_json(Fraction(3)) == 3
    assert Q.to_json(Fraction(-7, 3)) == "-7/3"
    assert QuadraticExtensionField(2).to_json((0, 1)) == [0, 1]
    with pytest.raises(ZeroDivisionError):
        Q.inv(Q.zero)


def test_pow_and_division():
    F = PrimeField(7)
    assert F.pow(3, 6) == 1
    assert F.div(6, 3) == 2
    assert F.pow(3, 0) == F.one


small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r))
)


@given(small_matrices)
def test_rank_over_rationals_matches_sympy(a):
    Q = RationalField()
    rows = [[Fraction(x) for x in row] for row in a]
    assert rank(Q, rows) == Matrix(a).rank()


@given(small_matrices, st.sampled_from([2, 3, 5]))
def test_rank_over_prime_field_matches_sympy(a, p):
    F = PrimeField(p)
    rows = [[x % p for x in row] for row in a]
    dm = DomainMatrix([[GF(p)(x) for x in row] for row in a], (len(a), len(a[0])), GF(p))
    assert rank(F, rows) == dm.rank()


@given(small_matrices)
def test_nullspace_vectors_are_killed(a):
    Q = RationalField()
    rows = [[Fraction(x) for x in row] for row in a]
    basis = nullspace(Q, rows)
    assert len(basis) == len(a[0]) - rank(Q, rows)
    for v in basis:
        assert all(x == 0 for x in mat_vec(Q, rows, v))


def test_rref_example():
    Q = RationalField()
    red, pivots = rref(Q, [[Fraction(x) for x in r] for r in [[2, 4, 2], [1, 2, 3]]])
    assert pivots == [0, 2]
    assert red == [[1, 2, 0], [0, 0, 1]]


def test_echelon_basis_incremental():
    F = PrimeField(3)
    eb = EchelonBasis(F, 3)
    assert eb.add([1, 2, 0])
    assert not eb.add([2, 1, 0])
    assert eb.add([0, 0, 1])
    assert eb.rank == 2 and eb.nullspace() == [[1, 1, 0]]


def test_nilpotency_and_scalars():
    Q = RationalField()
    n = [[Fraction(0), Fraction(1), Fraction(5)], [Fraction(0)] * 3, [Fraction(0), Fraction(0), Fraction(0)]]
    assert is_nilpotent(Q, n)
    assert not is_nilpotent(Q, identity(Q, 3))
    assert is_nilpotent(Q, [])
    assert is_scalar_matrix(Q, [[Fraction(2), 0], [0, Fraction(2)]], Fraction(2))
    assert trace(Q, identity(Q, 4)) == 4


def test_left_inverse():
    F = PrimeField(5)
    b = [[1, 0], [1, 0], [2, 1]]
    rows, inv = solve_left_inverse(F, b)
    assert rows == [0, 2]
    assert mat_mul(F, inv, [b[i] for i in rows]) == identity(F, 2)
    with pytest.raises(ValueError):
        solve_left_inverse(F, [[1, 2], [2, 4]])
