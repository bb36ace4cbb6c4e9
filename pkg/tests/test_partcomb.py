from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_partitions, partition_count, young_cells
from partblocks.partcomb import (
    EMPTY,
    Partition,
    PartitionError,
    addable_nodes,
    content_sum,
    dominance_leq,
    is_p_regular,
    new_partition,
    partitions_of,
    partitions_up_to,
    removable_nodes,
    sort_partitions,
)
from strategies import partitions


def P(*parts):
    return new_partition(parts)


def test_constructor_rejects_bad_input():
    with pytest.raises(PartitionError):
        Partition((2, 3))
    with pytest.raises(PartitionError):
        Partition((2, 0))
    with pytest.raises(PartitionError):
        new_partition((3, -1))


def test_trailing_zeros_are_stripped():
    assert new_partition((5, 5, 3, 2, 1, 1, 0, 0)) == P(5, 5, 3, 2, 1, 1)
    assert new_partition((0, 0)) == EMPTY


def test_exponent_notation():
    assert str(P(5, 5, 3, 2, 1, 1)) == "(5^2,3,2,1^2)"
    assert str(EMPTY) == "∅"
    assert str(P(7, 3, 3, 1, 1)) == "(7,3^2,1^2)"


def test_one_based_parts():
    lam = P(4, 1)
    assert lam.part(1) == 4 and lam.part(2) == 1 and lam.part(3) == 0
    with pytest.raises(IndexError):
        lam.part(0)
    assert lam.padded(4) == (4, 1, 0, 0)
    with pytest.raises(PartitionError):
        lam.padded(1)


def test_content_sum_small_cases():
    # contents of (3,1): 0,1,2 in row one, -1 in row two
    assert content_sum(P(3, 1)) == 2
    assert content_sum(P(1, 1, 1)) == -3
    assert content_sum(EMPTY) == 0


@given(partitions())
def test_content_sum_matches_cells(lam):
    assert content_sum(lam) == sum(c - r for r, c in young_cells(lam.parts))


@given(partitions())
def test_conjugate_content_is_negated(lam):
    conj = new_partition(sum(1 for x in lam.parts if x > c) for c in range(lam.part(1)))
    assert content_sum(conj) == -content_sum(lam)


@pytest.mark.parametrize("n", range(13))
def test_partition_counts(n):
    assert len(partitions_of(n)) == partition_count(n)


def test_partitions_match_independent_enumeration():
    for n in range(9):
        assert [p.parts for p in partitions_of(n)] == all_partitions(n)


def test_label_order():
    labels = partitions_up_to(3)
    assert [p.parts for p in labels] == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    assert sort_partitions(reversed(labels)) == labels


def test_regularity():
    assert is_p_regular(P(2, 2, 1), 3)
    assert not is_p_regular(P(2, 2, 1), 2)
    assert not is_p_regular(P(1, 1, 1), 3)
    assert is_p_regular(EMPTY, 2)
    with pytest.raises(ValueError):
        is_p_regular(P(1), 1)


def test_dominance():
    assert dominance_leq(P(2, 1, 1), P(2, 2))
    assert not dominance_leq(P(3, 3), P(4, 1, 1))
    assert not dominance_leq(P(4, 1, 1), P(3, 3))
    assert dominance_leq(P(1, 1), P(5)) and not dominance_leq(P(5), P(1, 1))  # lower degree sits below


@given(partitions(max_degree=8), partitions(max_degree=8))
def test_dominance_is_antisymmetric(lam, mu):
    if dominance_leq(lam, mu) and dominance_leq(mu, lam):
        assert lam == mu


@given(partitions())
def test_add_and_remove_nodes(lam):
    for node in addable_nodes(lam):
        bigger = lam.add_node(node.row)
        assert bigger.degree == lam.degree + 1 and bigger.contains(lam)
        assert node in removable_nodes(bigger)
    for node in removable_nodes(lam):
        smaller = lam.remove_node(node.row)
        assert lam.contains(smaller) and smaller.degree == lam.degree - 1
    assert len(addable_nodes(lam)) == len(removable_nodes(lam)) + 1


@given(st.integers(0, 6))
def test_up_to_is_union_of_degrees(n):
    labels = partitions_up_to(n)
    assert len(labels) == sum(partition_count(k) for k in range(n + 1))
    assert len(set(labels)) == len(labels)
