from fractions import Fraction as F

import pytest

from hyperorb.ages import (
    a_g,
    age_oracle,
    b_g,
    cotangent_weights,
    exponent_paper,
    sector_age,
    weight_vector,
)
from hyperorb.hyp_inertia import SectorKind, sectors_hyp


def twisted(g):
    return [s for s in sectors_hyp(g) if s.kind is SectorKind.TWISTED]


def test_weight_vector_examples():
    w = cotangent_weights(2, 3, 0, 1)
    assert w.residues == (2, 0, 1)
    assert w.zero_count == 1
    assert age_oracle(w) == 1
    w = cotangent_weights(2, 5, 1, 1)
    assert w.residues == (1, 2, 3)
    assert all(type(r) is int for r in w.residues)
    assert age_oracle(w) == F(9, 5)


def test_genus_two_ages():
    five = {}
    for s in twisted(2):
        if s.N == 5:
            five.setdefault(s.i, set()).add(sector_age(s))
    assert five == {1: {F(9, 5)}, 2: {F(8, 5)}, 3: {F(7, 5)}, 4: {F(6, 5)}}
    assert {sector_age(s) for s in twisted(2) if s.N in (4, 6)} == {F(3, 2)}
    assert {sector_age(s) for s in twisted(2) if s.N == 3} == {F(1)}
    involutions = {s.k: sector_age(s) for s in twisted(2) if s.N == 2}
    assert involutions == {3: F(1, 2), 2: F(1)}


def test_untwisted_and_tau_have_age_zero():
    for s in sectors_hyp(4)[:2]:
        assert weight_vector(s).zero_count == 7
        assert sector_age(s) == 0


def test_printed_exponents():
    assert a_g(2, 1, 3) == 4 and a_g(2, 2, 3) == 4
    assert a_g(2, 1, 6) == 3 and a_g(2, 5, 6) == 3
    assert [b_g(2, i, 5) for i in (1, 2, 3, 4)] == [F(18, 5), F(16, 5), F(14, 5), F(12, 5)]
    assert b_g(2, 1, 4) == 3 and b_g(2, 3, 4) == 3
    assert b_g(3, 1, 6) == 5


def test_exponent_paper_by_family():
    sectors = sectors_hyp(2)
    with pytest.raises(ValueError):
        exponent_paper(sectors[0])
    assert exponent_paper(sectors[1]) == 0
    involutions = {s.k: exponent_paper(s) for s in twisted(2) if s.N == 2}
    assert involutions == {3: F(1, 2), 2: F(1)}


def test_zero_count_is_coarse_dimension():
    for g in range(2, 20):
        for s in twisted(g):
            assert weight_vector(s).zero_count == s.k - 1, s.sector_id
            assert len(weight_vector(s).residues) == 2 * g - 1


def test_printed_exponents_against_oracle():
    for g in range(2, 30):
        for s in twisted(g):
            age = sector_age(s)
            if s.N == 2:
                assert exponent_paper(s) == age, s.sector_id
            else:
                assert exponent_paper(s) - 2 * age == 2 * (s.k - 1), s.sector_id


def test_age_bounds_and_denominator():
    for g in range(2, 20):
        for s in twisted(g):
            age = sector_age(s)
            assert 0 <= age <= s.codimension
            assert (age * s.N).denominator == 1
