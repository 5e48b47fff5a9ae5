"""Polynomials in q with nonnegative rational exponents and nonnegative integer coefficients."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

Term = Tuple[Fraction, int]  # (exponent, coefficient)


class NegativeShiftError(ValueError):
    """Raised when a polynomial would be multiplied by a negative power of q."""


class QPolynomial:
    """Immutable sparse polynomial ``sum c_e q^e`` with e in Q>=0 and c in Z>0.

    There is no subtraction: coefficients count dimensions, so a negative
    intermediate always means a bookkeeping error upstream.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Fraction | int, int]] = None):
        cleaned: Dict[Fraction, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = Fraction(exp)
            if exp < 0:
                raise ValueError(f"Exponents must be nonnegative, got {exp}")
            if not isinstance(coeff, int) or coeff < 0:
                raise ValueError(f"Coefficients must be nonnegative integers, got {coeff!r}")
            if coeff:
                cleaned[exp] = cleaned.get(exp, 0) + coeff
        self._terms: Tuple[Term, ...] = tuple(sorted(cleaned.items()))
        self._hash: Optional[int] = None

    # --- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: Fraction | int, coeff: int = 1) -> "QPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> "QPolynomial":
        acc: Dict[Fraction, int] = {}
        for exp, coeff in terms:
            exp = Fraction(exp)
            acc[exp] = acc.get(exp, 0) + coeff
        return cls(acc)

    @classmethod
    def _trusted(cls, acc: Mapping[Fraction, int]) -> "QPolynomial":
        """From Fraction exponents >= 0 and integer coefficients >= 0 that need no checking."""
        poly = cls.__new__(cls)
        poly._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        poly._hash = None
        return poly

    # --- access -------------------------------------------------------
    def terms(self) -> Tuple[Term, ...]:
        """Terms in strictly ascending exponent order."""
        return self._terms

    def __iter__(self) -> Iterator[Term]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exponent: Fraction | int) -> int:
        exponent = Fraction(exponent)
        for exp, c in self._terms:
            if exp == exponent:
                return c
        return 0

    @property
    def constant_term(self) -> int:
        return self.coeff(0)

    @property
    def degree(self) -> Optional[Fraction]:
        return self._terms[-1][0] if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    # --- arithmetic ---------------------------------------------------
    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return poly_sum((self, other))

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return QPolynomial.from_terms(
            (e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms
        )

    __rmul__ = __mul__

    def scale(self, factor: int) -> "QPolynomial":
        if factor < 0:
            raise ValueError(f"Scale factor must be nonnegative, got {factor}")
        return QPolynomial._trusted({e: c * factor for e, c in self._terms})

    def shift(self, exponent: Fraction | int) -> "QPolynomial":
        """q^exponent * self."""
        exponent = Fraction(exponent)
        if exponent < 0:
            raise NegativeShiftError(f"Cannot shift by a negative exponent {exponent}")
        return QPolynomial._trusted({e + exponent: c for e, c in self._terms})

    def total(self) -> int:
        """Value at q = 1."""
        return sum(c for _, c in self._terms)

    # --- comparison / display ----------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"QPolynomial({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def add(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p + r


def mul(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p * r


def shift(p: QPolynomial, e: Fraction | int) -> QPolynomial:
    return p.shift(e)


def total(p: QPolynomial) -> int:
    return p.total()


def poly_sum(polys: Iterable[QPolynomial]) -> QPolynomial:
    acc: Dict[Fraction, int] = {}
    for p in polys:
        for exp, coeff in p._terms:
            acc[exp] = acc.get(exp, 0) + coeff
    return QPolynomial._trusted(acc)


def _render_exponent(exp: Fraction) -> str:
    if exp.denominator == 1:
        return "q" if exp == 1 else f"q^{exp.numerator}"
    return f"q^({exp.numerator}/{exp.denominator})"


def render(p: QPolynomial) -> str:
    """Canonical text form, ascending exponents, e.g. ``2 + q^(1/2) + 4*q^3``."""
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in p.terms():
        if exp == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(_render_exponent(exp))
        else:
            parts.append(f"{c}*{_render_exponent(exp)}")
    return " + ".join(parts)


def render_latex(p: QPolynomial) -> str:
    """LaTeX form; nonintegral exponents become ``\\frac``."""
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in p.terms():
        if exp == 0:
            parts.append(str(c))
            continue
        if exp.denominator == 1:
            power = "q" if exp == 1 else f"q^{{{exp.numerator}}}"
        else:
            power = f"q^{{\\frac{{{exp.numerator}}}{{{exp.denominator}}}}}"
        parts.append(power if c == 1 else f"{c}{power}")
    return " + ".join(parts)


# --- Poincare polynomials of the coarse spaces M_{0,k+2}/S_k and M_{0,k+2}/(S_k x S_2) ---

@lru_cache(maxsize=None)
def p0_two_fixed(k: int) -> QPolynomial:
    """sum_{i=0}^{k-1} q^i."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return QPolynomial({i: 1 for i in range(k)})


@lru_cache(maxsize=None)
def p0_swap(k: int) -> QPolynomial:
    """1 for k = 1, else sum_{i=0}^{floor((k-2)/4)} (q^i + q^(i+1))."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k == 1:
        return QPolynomial.one()
    return QPolynomial.from_terms(
        t for i in range((k - 2) // 4 + 1) for t in ((Fraction(i), 1), (Fraction(i + 1), 1))
    )
