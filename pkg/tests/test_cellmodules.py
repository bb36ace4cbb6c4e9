from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import hook_dimension, stirling2_explicit
from partblocks.diagoracle.cellmodules import (
    CellModule,
    cell_module_rep,
    gram_rank,
    half_diagram_basis,
    regular_dimension_check,
)
from partblocks.diagoracle.diagrams import SetPartitionDiagram, all_diagrams, compose
from partblocks.diagoracle.fields import PrimeField, QuadraticExtensionField, RationalField
from partblocks.diagoracle.linalg import mat_mul, mat_scale, transpose
from partblocks.partcomb import is_p_regular, new_partition, partitions_up_to

Q = RationalField()


def P(*parts):
    return new_partition(parts)


def half_rank(n, t):
    m = n - t
    return sum(stirling2_explicit(n, k) * comb(k, m) for k in range(n + 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_half_diagram_counts(n):
    for t in range(n + 1):
        hb = half_diagram_basis(n, t)
        assert hb.rank == half_rank(n, t)
        ds = hb.diagrams()
        assert len(ds) == hb.rank * factorial(n - t) and len(set(ds)) == len(ds)
        assert all(hb.contains(w) for w in ds)
    with pytest.raises(ValueError):
        half_diagram_basis(n, n + 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_cellular_dimension_count(n):
    total, cells = regular_dimension_check(n)
    assert total == cells


def test_factorisation_through_representatives():
    hb = half_diagram_basis(3, 1)
    for w in hb.diagrams():
        key, sigma = hb.factor(w)
        rep = hb.representatives[hb.index[key]]
        # w = rep * d_sigma, with d_sigma on the two propagating strands
        full = (0,) + tuple(1 + s for s in sigma)
        z, loops = compose(rep, SetPartitionDiagram.permutation(full))
        assert z == w and loops == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cell_dimensions(n):
    for lam in partitions_up_to(n):
        cm = CellModule(lam, n, 2, Q)
        assert cm.dimension == half_rank(n, n - lam.degree) * hook_dimension(lam.parts)
        assert len(cm.labels()) == cm.dimension


def test_cell_dimension_table_n3():
    dims = {lam.parts: CellModule(lam, 3, 1, Q).dimension for lam in partitions_up_to(3)}
    assert dims == {(): 5, (1,): 10, (2,): 6, (1, 1): 6, (3,): 1, (2, 1): 2, (1, 1, 1): 1}


@settings(max_examples=60)
@given(
    st.sampled_from(partitions_up_to(3)),
    st.sampled_from(all_diagrams(3)),
    st.sampled_from(all_diagrams(3)),
    st.sampled_from([(Q, 3), (PrimeField(3), 2), (QuadraticExtensionField(2), (0, 1))]),
)
def test_action_is_multiplicative(lam, x, y, case):
    F, delta = case
    cm = CellModule(lam, 3, delta, F)
    z, loops = compose(x, y)
    lhs = mat_mul(F, cm.act(x), cm.act(y))
    assert lhs == mat_scale(F, cm.algebra.delta_power(loops), cm.act(z))


@settings(max_examples=60)
@given(st.sampled_from(partitions_up_to(3)), st.sampled_from(all_diagrams(3)), st.sampled_from([1, 2, 3, Fraction(1, 2)]))
def test_gram_form_is_invariant(lam, x, delta):
    cm = CellModule(lam, 3, delta, Q)
    g = cm.gram_matrix()
    assert mat_mul(Q, transpose(cm.act(x)), g) == mat_mul(Q, g, cm.act(x.flip()))


def test_gram_form_is_symmetric():
    for lam in partitions_up_to(3):
        g = CellModule(lam, 3, 3, Q).gram_matrix()
        assert g == transpose(g)


def test_generic_delta_is_nondegenerate():
    for lam in partitions_up_to(3):
        assert gram_rank(lam, 3, Fraction(5, 2), Q) == CellModule(lam, 3, 1, Q).dimension


def test_ladder_values_at_delta_one():
    # chain of delta-pairs through the empty partition when n = 3, delta = 1
    ranks = [gram_rank(lam, 3, 1, Q) for lam in (P(), P(2), P(2, 1))]
    assert ranks == [1, 4, 2]


def test_ranks_over_gf3():
    got = {lam.parts: gram_rank(lam, 3, 2, PrimeField(3)) for lam in partitions_up_to(3)}
    assert got == {(): 4, (1,): 4, (2,): 6, (1, 1): 6, (3,): 1, (2, 1): 1, (1, 1, 1): 0}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_regular_labels_have_nonzero_form(p):
    F = PrimeField(p)
    for delta in range(1, p):
        for lam in partitions_up_to(3):
            if is_p_regular(lam, p):
                assert gram_rank(lam, 3, delta, F) > 0


def test_rep_bundle():
    rep = cell_module_rep(P(1), 2, 3, Q)
    assert rep.dimension == 3
    assert set(rep.generator_matrices) == {"s_1,2", "p_1,2", "p_1", "p_2"}
    with pytest.raises(ValueError):
        CellModule(P(3), 2, 1, Q)
