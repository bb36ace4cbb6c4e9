from __future__ import annotations

import pytest

from partblocks.diagoracle.fields import PrimeField, RationalField
from partblocks.diagoracle.morita import MoritaEmbedding, morita_check, morita_report


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("F", [RationalField(), PrimeField(5)], ids=lambda F: F.name)
def test_report_fields(n, F):
    report = morita_report(n, 3, F)
    assert report.n == n
    assert report.xi_idempotent and report.unit and report.multiplicative
    assert report.injective and report.in_half_algebra and report.p_relation
    assert report.ok


def test_unit_and_pi_relation():
    emb = MoritaEmbedding(1, 4, RationalField())
    small = emb.small
    assert emb.theta(small.one()) == emb.xi
    e = emb.theta(small.p(1))
    assert e * e == e * small.delta
    assert small.delta == 3


def test_other_parameters():
    assert morita_check(1, 2, PrimeField(3))
    assert morita_check(2, 7, RationalField())
