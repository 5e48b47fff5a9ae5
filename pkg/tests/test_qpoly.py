from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperorb.qpoly import (
    NegativeShiftError,
    QPolynomial,
    add,
    mul,
    p0_swap,
    p0_two_fixed,
    poly_sum,
    render,
    render_latex,
    shift,
    total,
)

exponents = st.builds(Fraction, st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=12))
polys = st.dictionaries(exponents, st.integers(min_value=0, max_value=5), max_size=6).map(QPolynomial)


def q(terms):
    return QPolynomial({Fraction(e): c for e, c in terms.items()})


def test_render_canonical_form():
    p = q({0: 2, Fraction(1, 2): 1, 3: 4})
    assert render(p) == "2 + q^(1/2) + 4*q^3"
    assert render(QPolynomial.monomial(1)) == "q"
    assert render(QPolynomial.zero()) == "0"
    assert str(p) == render(p)


def test_render_latex_uses_frac():
    p = q({0: 2, Fraction(1, 2): 1, 3: 4})
    assert render_latex(p) == "2 + q^{\\frac{1}{2}} + 4q^{3}"


def test_terms_are_merged_and_sorted():
    p = QPolynomial.from_terms([(Fraction(3), 1), (Fraction(1, 2), 2), (Fraction(3), 1), (Fraction(0), 0)])
    assert p.terms() == ((Fraction(1, 2), 2), (Fraction(3), 2))
    assert p.coeff(3) == 2 and p.coeff(1) == 0
    assert p.degree == 3
    assert p.constant_term == 0


def test_rejects_negative_data():
    with pytest.raises(ValueError):
        QPolynomial({Fraction(-1, 2): 1})
    with pytest.raises(ValueError):
        QPolynomial({1: -1})
    with pytest.raises(NegativeShiftError):
        QPolynomial.one().shift(Fraction(-1, 3))


def test_generators():
    assert p0_two_fixed(1) == QPolynomial.one()
    assert p0_two_fixed(3) == q({0: 1, 1: 1, 2: 1})
    assert p0_swap(1) == QPolynomial.one()
    assert p0_swap(2) == q({0: 1, 1: 1})
    assert p0_swap(5) == q({0: 1, 1: 1})
    assert p0_swap(6) == q({0: 1, 1: 2, 2: 1})
    with pytest.raises(ValueError):
        p0_swap(0)
    assert p0_swap(6) is p0_swap(6)


def test_generator_totals():
    for k in range(1, 40):
        assert p0_two_fixed(k).total() == k
        assert p0_swap(k).total() == (1 if k == 1 else 2 * ((k - 2) // 4 + 1))


def test_module_functions_match_methods():
    p, r = q({0: 1, Fraction(1, 3): 2}), q({1: 1})
    assert add(p, r) == p + r
    assert mul(p, r) == p * r
    assert shift(p, 2) == p.shift(2)
    assert total(p) == 3
    assert poly_sum([p, r, p]) == p + r + p
    assert poly_sum([]) == QPolynomial.zero()


@given(polys, polys)
def test_addition_commutes(p, r):
    assert p + r == r + p


@given(polys, polys, polys)
def test_ring_laws(p, r, s):
    assert (p + r) + s == p + (r + s)
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p * r == r * p
    assert p * QPolynomial.one() == p
    assert p + QPolynomial.zero() == p


@given(polys, polys)
def test_total_is_a_ring_map(p, r):
    assert (p + r).total() == p.total() + r.total()
    assert (p * r).total() == p.total() * r.total()


@given(polys, exponents, exponents)
def test_shift_composes(p, a, b):
    assert p.shift(a).shift(b) == p.shift(a + b)
    assert p.shift(a).total() == p.total()
    assert p.shift(a) == p * QPolynomial.monomial(a)


@given(polys, st.integers(min_value=0, max_value=6))
def test_scale(p, n):
    assert p.scale(n) == n * p
    assert p.scale(n).total() == n * p.total()
