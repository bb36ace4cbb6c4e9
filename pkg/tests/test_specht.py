from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import hook_dimension, rim_hook_core
from partblocks.diagoracle.fields import PrimeField, RationalField
from partblocks.diagoracle.linalg import rank
from partblocks.diagoracle.specht import (
    SpechtBoundError,
    compose_perms,
    invert_perm,
    perm_sign,
    specht_module,
    specht_rep,
    standard_tableaux,
    transposition,
)
from partblocks.partcomb import is_p_regular, new_partition, partitions_of, partitions_up_to

SHAPES = [lam for lam in partitions_up_to(5) if lam.degree]
shapes = st.sampled_from([lam for lam in SHAPES if lam.degree <= 4])


def specht_gram_rank(lam, F):
    S = specht_module(lam)
    ident = tuple(range(lam.degree))
    return rank(F, [[F.from_int(x) for x in row] for row in S.form_with(ident)])


def test_permutation_helpers():
    a, b = (1, 2, 0), (1, 0, 2)
    assert compose_perms(a, b) == (2, 1, 0)
    assert compose_perms(a, invert_perm(a)) == (0, 1, 2)
    assert perm_sign((1, 0, 2)) == -1 and perm_sign((1, 2, 0)) == 1
    assert transposition(4, 1, 3) == (0, 3, 2, 1)


@pytest.mark.parametrize("lam", SHAPES, ids=str)
def test_dimension_is_hook_formula(lam):
    assert len(standard_tableaux(lam)) == hook_dimension(lam.parts)
    assert specht_module(lam).dimension == hook_dimension(lam.parts)


@pytest.mark.parametrize("m", range(1, 6))
def test_regular_representation_dimension(m):
    assert sum(specht_module(lam).dimension ** 2 for lam in partitions_of(m)) == len(list(permutations(range(m))))


def test_size_bound():
    with pytest.raises(SpechtBoundError):
        specht_module(new_partition((6,)))


@given(shapes, st.data())
def test_matrices_form_a_representation(lam, data):
    S = specht_module(lam)
    perms = list(permutations(range(lam.degree)))
    a = data.draw(st.sampled_from(perms))
    b = data.draw(st.sampled_from(perms))
    ma, mb = S.matrix(a), S.matrix(b)
    prod = [[sum(ma[i][k] * mb[k][j] for k in range(S.dimension)) for j in range(S.dimension)] for i in range(S.dimension)]
    assert prod == S.matrix(compose_perms(a, b))


@given(shapes, st.data())
def test_form_is_invariant(lam, data):
    S = specht_module(lam)
    perms = list(permutations(range(lam.degree)))
    w = data.draw(st.sampled_from(perms))
    a = data.draw(st.integers(0, S.dimension - 1))
    b = data.draw(st.integers(0, S.dimension - 1))
    ident = tuple(range(lam.degree))
    assert S.inner_product(w, a, w, b) == S.inner_product(ident, a, ident, b)
    assert S.inner_product(ident, a, w, b) == S.inner_product(invert_perm(w), a, ident, b)


@pytest.mark.parametrize("m", range(1, 6))
def test_trivial_and_sign(m):
    triv, sign = specht_module(new_partition((m,))), specht_module(new_partition((1,) * m))
    for w in list(permutations(range(m)))[:30]:
        assert triv.matrix(w) == [[1]]
        assert sign.matrix(w) == [[perm_sign(w)]]


def test_two_dimensional_rep_reductions():
    lam = new_partition((2, 1))
    assert specht_gram_rank(lam, RationalField()) == 2
    assert specht_gram_rank(lam, PrimeField(2)) == 2
    assert specht_gram_rank(lam, PrimeField(3)) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("lam", SHAPES, ids=str)
def test_cores_give_nondegenerate_forms(lam, p):
    if new_partition(rim_hook_core(lam.parts, p)) == lam:
        assert specht_gram_rank(lam, PrimeField(p)) == specht_module(lam).dimension


@pytest.mark.parametrize("lam", SHAPES, ids=str)
def test_form_nonzero_exactly_for_regular(lam):
    for p in (2, 3, 5):
        assert (specht_gram_rank(lam, PrimeField(p)) > 0) == is_p_regular(lam, p)


def test_specht_rep_over_field():
    rep = specht_rep(new_partition((2, 1)), PrimeField(3))
    assert rep.dimension == 2 and set(rep.generator_matrices) == {"s_1", "s_2"}
    assert all(x in range(3) for row in rep.matrix("s_1") for x in row)
