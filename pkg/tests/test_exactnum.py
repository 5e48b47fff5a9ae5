from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperorb.exactnum import (
    CharacterClass,
    ClassKind,
    TwistModulusError,
    decompositions,
    frac,
    frac_sum,
    phi,
    unit_classes,
    units,
)


def members(classes):
    return [c.members for c in classes]


def test_phi_small_values():
    assert [phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_phi_rejects_zero():
    with pytest.raises(ValueError):
        phi(0)


def test_units():
    assert units(1) == [0]
    assert units(8) == [1, 3, 5, 7]
    assert units(7) == [1, 2, 3, 4, 5, 6]


def test_inverse_classes():
    assert members(unit_classes(5, ClassKind.INV)) == [(1, 4), (2, 3)]
    assert members(unit_classes(3, ClassKind.INV)) == [(1, 2)]
    assert members(unit_classes(2, ClassKind.INV)) == [(1,)]


def test_twisted_classes():
    assert members(unit_classes(8, ClassKind.TWIST)) == [(1, 3), (5, 7)]
    assert members(unit_classes(12, ClassKind.TWIST)) == [(1, 5), (7, 11)]
    assert members(unit_classes(4, ClassKind.TWIST)) == [(1,), (3,)]


def test_twisted_identification_needs_four_to_divide_modulus():
    with pytest.raises(TwistModulusError):
        unit_classes(6, ClassKind.TWIST)
    with pytest.raises(TwistModulusError):
        CharacterClass(modulus=10, members=(1,), kind=ClassKind.TWIST)


def test_character_class_validation():
    with pytest.raises(ValueError):
        CharacterClass(modulus=6, members=(2,), kind=ClassKind.FULL)
    with pytest.raises(ValueError):
        CharacterClass(modulus=5, members=(4, 1), kind=ClassKind.INV)
    label = CharacterClass(modulus=8, members=(1, 3), kind=ClassKind.TWIST)
    assert label.representative == 1
    assert label.contains(11)
    assert str(label) == "{1,3} mod 8"


def test_frac_of_negative():
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac(5) == 0


def test_frac_sum():
    assert frac_sum(1, 5, range(1, 4)) == Fraction(6, 5)
    assert frac_sum(2, 3, [2, 3, 4]) == Fraction(1 + 0 + 2, 3)
    assert frac_sum(1, 5, range(1, 8, 2)) == Fraction(1 + 3 + 0 + 2, 5)
    assert frac_sum(1, 5, range(4, 4)) == 0


def test_decompositions():
    assert decompositions(6, 2) == [(3, 0), (2, 2)]
    assert decompositions(6, 3) == [(2, 0)]
    assert decompositions(6, 4) == [(1, 2)]
    assert decompositions(6, 5) == [(1, 1)]
    assert decompositions(6, 6) == [(1, 0)]
    with pytest.raises(ValueError):
        decompositions(2, 2)
    with pytest.raises(ValueError):
        decompositions(6, 1)


@given(st.integers(min_value=1, max_value=120), st.sampled_from([ClassKind.FULL, ClassKind.INV]))
def test_classes_partition_units(M, kind):
    classes = unit_classes(M, kind)
    flat = sorted(u for c in classes for u in c.members)
    assert flat == units(M)


@given(st.integers(min_value=1, max_value=60))
def test_twisted_classes_partition_units(m):
    M = 4 * m
    classes = unit_classes(M, ClassKind.TWIST)
    assert sorted(u for c in classes for u in c.members) == units(M)
    assert all(len(c.members) in (1, 2) for c in classes)


@given(st.integers(min_value=-500, max_value=500), st.integers(min_value=1, max_value=50))
def test_frac_identities(num, den):
    x = Fraction(num, den)
    f = frac(x)
    assert 0 <= f < 1
    assert (x - f).denominator == 1
    assert f == Fraction(num % den, den)


@given(st.integers(min_value=3, max_value=200), st.integers(min_value=2, max_value=200))
def test_decompositions_are_exact(n, N):
    for k, a in decompositions(n, N):
        assert n == k * N + a and k >= 1 and a in (0, 1, 2)


@given(st.integers(min_value=3, max_value=300))
def test_inverse_classes_halve_the_units(M):
    assert len(unit_classes(M, ClassKind.INV)) == phi(M) // 2
    assert len(unit_classes(M, ClassKind.FULL)) == phi(M)


@given(st.integers(min_value=1, max_value=60))
def test_twisted_identification_is_an_involution(m):
    M = 4 * m
    twist = M // 2 - 1
    for u in units(M):
        assert (u * twist * twist) % M == u


@given(st.integers(min_value=-500, max_value=500), st.integers(min_value=1, max_value=50))
def test_frac_of_opposites(num, den):
    x = Fraction(num, den)
    s = frac(x) + frac(-x)
    assert s in (0, 1)
    assert (s == 0) == (x.denominator == 1)
