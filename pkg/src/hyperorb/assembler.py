"""Orbifold Poincare polynomials, stringy Chow polynomials and the reconciliation report for H_g."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .ages import a_g, b_g, exponent_paper, sector_age, weight_vector
from .exactnum import decompositions, phi, units
from .hyp_inertia import HypSector, SectorKind, iota_map, sectors_hyp
from .qpoly import QPolynomial, p0_swap, p0_two_fixed, poly_sum

logger = logging.getLogger(__name__)

AgeFn = Callable[[HypSector], Fraction]


class Mode(str, Enum):
    PAPER = "paper"
    FIRST_PRINCIPLES = "fp"


class Grading(str, Enum):
    REAL = "real"        # shift by 2 * age
    COMPLEX = "complex"  # shift by age

    @property
    def factor(self) -> int:
        return 2 if self is Grading.REAL else 1


class ReconciliationError(RuntimeError):
    """Raised when a sector breaks one of the laws linking the two age pipelines."""

    def __init__(self, law: str, sector_id: str, detail: str):
        super().__init__(f"{law} violated at {sector_id}: {detail}")
        self.law = law
        self.sector_id = sector_id
        self.detail = detail

    def __reduce__(self):
        return (type(self), (self.law, self.sector_id, self.detail))


def _check_genus(g: int) -> None:
    if g < 2:
        raise ValueError(f"H_g needs genus g >= 2, got g={g}")


# --- closed formula ----------------------------------------------------------

@dataclass(frozen=True)
class FormulaTerm:
    """multiplicity * q^exponent * coarse, one summand of the closed formula."""

    multiplicity: int
    exponent: Fraction
    coarse: QPolynomial


def formula_terms(g: int) -> List[FormulaTerm]:
    """Summands of the closed formula; A_n ranges over (k, N, i), N > 2, kN = n, i a unit mod N."""
    _check_genus(g)
    n = 2 * g + 2
    terms = [FormulaTerm(2, Fraction(0), QPolynomial.one())]
    if g % 2 == 0:
        terms.append(FormulaTerm(1, Fraction(g - 1, 2), p0_two_fixed(g + 1)))
        terms.append(FormulaTerm(1, Fraction(g, 2), p0_two_fixed(g)))
    else:
        terms.append(FormulaTerm(2, Fraction(g - 1, 2), p0_swap(g + 1)))
        terms.append(FormulaTerm(2, Fraction(g, 2), p0_swap(g)))
    for N in range(3, n + 1):
        for k, a in decompositions(n, N):
            for i in units(N):
                if a == 0:
                    terms.append(FormulaTerm(1, a_g(g, i, N), p0_swap(k)))
                elif a == 1:
                    terms.append(FormulaTerm(2, b_g(g, i, N), p0_two_fixed(k)))
                else:
                    terms.append(FormulaTerm(1, b_g(g, i, N), p0_swap(k)))
    return terms


def pcr_paper(g: int) -> QPolynomial:
    return poly_sum(t.coarse.shift(t.exponent).scale(t.multiplicity) for t in formula_terms(g))


def pcr_paper_by_sector(g: int) -> QPolynomial:
    """The closed formula re-assembled one sector at a time from exponent_paper."""
    _check_genus(g)
    return poly_sum(
        s.coarse.poincare.shift(0 if s.kind is SectorKind.UNTWISTED else exponent_paper(s))
        for s in sectors_hyp(g)
    )


# --- first principles --------------------------------------------------------

def resolve_age(age_of: Optional[AgeFn] = None) -> AgeFn:
    """The given age function, or the module-level oracle looked up at call time."""
    return age_of if age_of is not None else sector_age


def pcr_first_principles(g: int, grading: Grading = Grading.REAL,
                         age_of: Optional[AgeFn] = None) -> QPolynomial:
    _check_genus(g)
    age_of = resolve_age(age_of)
    s = Grading(grading).factor
    return poly_sum(sector.coarse.poincare.shift(s * age_of(sector)) for sector in sectors_hyp(g))


def orbifold_poincare(g: int, mode: Mode, grading: Grading = Grading.REAL) -> QPolynomial:
    if Mode(mode) is Mode.PAPER:
        return pcr_paper(g)
    return pcr_first_principles(g, grading)


@dataclass(frozen=True)
class CRPolynomialBundle:
    """An orbifold Poincare polynomial with the conventions that produced it; grading is None in paper mode."""

    g: int
    mode: Mode
    grading: Optional[Grading]
    polynomial: QPolynomial

    @property
    def label(self) -> str:
        if self.grading is None:
            return f"P_orb(H_{self.g}) mode={self.mode.value}"
        return f"P_orb(H_{self.g}) mode={self.mode.value} grading={self.grading.value}"


def cr_bundle(g: int, mode: Mode, grading: Grading = Grading.REAL) -> CRPolynomialBundle:
    mode = Mode(mode)
    used = None if mode is Mode.PAPER else Grading(grading)
    return CRPolynomialBundle(g=g, mode=mode, grading=used, polynomial=orbifold_poincare(g, mode, grading))


def stringy_chow(g: int, mode: Mode, grading: Grading = Grading.REAL,
                 age_of: Optional[AgeFn] = None) -> QPolynomial:
    """Same assembly with every coarse Poincare polynomial replaced by 1."""
    _check_genus(g)
    if Mode(mode) is Mode.PAPER:
        return poly_sum(QPolynomial.monomial(t.exponent, t.multiplicity) for t in formula_terms(g))
    age_of = resolve_age(age_of)
    s = Grading(grading).factor
    return poly_sum(QPolynomial.monomial(s * age_of(sector)) for sector in sectors_hyp(g))


# --- totals --------------------------------------------------------------------

@dataclass(frozen=True)
class CorollaryTerm:
    N: int
    k: int
    a: int
    phi: int
    floor_literal: int
    floor_clamped: int


@dataclass(frozen=True)
class CorollaryValue:
    literal: int
    clamped: int


def corollary_reference(g: int) -> List[CorollaryTerm]:
    """Per-N floor terms of the closed total count, over n = kN or n = kN + 2 with N > 2."""
    _check_genus(g)
    n = 2 * g + 2
    rows = []
    for N in range(3, n + 1):
        for k, a in decompositions(n, N):
            if a == 1:
                continue
            floor = (k - 2) // 4
            rows.append(CorollaryTerm(N=N, k=k, a=a, phi=phi(N),
                                      floor_literal=floor, floor_clamped=max(floor, 0)))
    return rows


def hcr_corollary(g: int) -> CorollaryValue:
    """Literal evaluation of the closed total-dimension formulas, plus a clamped variant."""
    _check_genus(g)
    n = 2 * g + 2
    if g % 2 == 0:
        base = 3 + 2 * g
    else:
        base = 2 + 4 * ((n - 2) // 4 + (n - 1) // 4)
    fixed_part = 2 * sum(
        k * phi(N) for N in range(3, n + 1) for k, a in decompositions(n, N) if a == 1
    )
    floors = corollary_reference(g)
    literal = base + fixed_part + 2 * sum(t.floor_literal * t.phi for t in floors)
    clamped = base + fixed_part + 2 * sum(t.floor_clamped * t.phi for t in floors)
    return CorollaryValue(literal=literal, clamped=clamped)


# --- reconciliation ----------------------------------------------------------

@dataclass(frozen=True)
class ReconciliationRow:
    sector_id: str
    N: int
    k: int
    a: int
    exponent_paper: Fraction
    age: Fraction
    twice_age: Fraction
    difference: Fraction
    predicted: Fraction
    convention: str  # which age the exponent is compared against: "2*age" or "age"


@dataclass(frozen=True)
class ReconciliationTotals:
    paper_total: int
    fp_total: int
    corollary_literal: int
    corollary_clamped: int

    @property
    def corollary_gap(self) -> int:
        """Informational: how far the literal closed count is from the assembled total."""
        return self.paper_total - self.corollary_literal


@dataclass
class ReconciliationReport:
    g: int
    rows: List[ReconciliationRow] = field(default_factory=list)
    totals: Optional[ReconciliationTotals] = None

    def to_dict(self) -> Dict:
        data = asdict(self)
        if self.totals is not None:
            data["totals"]["corollary_gap"] = self.totals.corollary_gap
        return data


def _violation(law: str, sector: HypSector, detail: str) -> None:
    logger.error("law=%s sector=%s detail=%s", law, sector.sector_id, detail)
    raise ReconciliationError(law, sector.sector_id, detail)


def reconcile(g: int, age_of: Optional[AgeFn] = None,
              paper: Optional[QPolynomial] = None,
              first_principles: Optional[QPolynomial] = None) -> ReconciliationReport:
    """Compare printed exponents with oracle ages sector by sector and check the sector laws.

    ``paper`` and ``first_principles`` (real grading) are reused for the totals when the
    caller has already built them. Raises ReconciliationError naming the first offending
    sector.
    """
    _check_genus(g)
    age_of = resolve_age(age_of)
    sectors = sectors_hyp(g)
    partners = iota_map(sectors)
    report = ReconciliationReport(g=g)

    for s in sectors:
        if s.kind is SectorKind.UNTWISTED:
            continue
        age = age_of(s)
        exponent = exponent_paper(s)
        if s.kind is SectorKind.TAU:
            if age != 0 or exponent != 0:
                _violation("tau-untwisted", s, f"age={age}, exponent={exponent}")
            continue
        codim = s.codimension
        zeros = weight_vector(s).zero_count
        if zeros != s.k - 1:
            _violation("zero-count", s, f"{zeros} zero weights, expected k-1={s.k - 1}")
        if not (0 <= age <= codim and (age * s.N).denominator == 1):
            _violation("age-bounds", s, f"age={age} outside [0, {codim}] or not in (1/{s.N})Z")
        partner_age = age_of(partners[s])
        if age + partner_age != codim:
            _violation("iota-pairing", s,
                       f"age {age} + partner age {partner_age} != codimension {codim}")

        twice_age = 2 * age
        if s.N == 2:
            difference, predicted, convention = exponent - age, Fraction(0), "age"
        else:
            difference, predicted, convention = exponent - twice_age, Fraction(2 * (s.k - 1)), "2*age"
        if difference != predicted:
            _violation("formula-vs-oracle", s,
                       f"exponent {exponent} - {convention} = {difference}, expected {predicted}")
        report.rows.append(ReconciliationRow(
            sector_id=s.sector_id, N=s.N, k=s.k, a=s.a, exponent_paper=exponent,
            age=age, twice_age=twice_age, difference=difference, predicted=predicted,
            convention=convention,
        ))

    if paper is None:
        paper = pcr_paper(g)
    if first_principles is None:
        first_principles = pcr_first_principles(g, Grading.REAL, age_of)
    corollary = hcr_corollary(g)
    report.totals = ReconciliationTotals(
        paper_total=paper.total(),
        fp_total=first_principles.total(),
        corollary_literal=corollary.literal,
        corollary_clamped=corollary.clamped,
    )
    logger.info("reconciled g=%d rows=%d paper_total=%d corollary_literal=%d",
                g, len(report.rows), report.totals.paper_total, corollary.literal)
    return report


def genus_pipeline(g: int) -> ReconciliationReport:
    """Sectors, both orbifold Poincare polynomials and the reconciliation report for one genus."""
    paper = pcr_paper(g)
    real = pcr_first_principles(g, Grading.REAL)
    report = reconcile(g, paper=paper, first_principles=real)
    if report.totals.paper_total != report.totals.fp_total:
        raise ReconciliationError("mode-equal-totals", f"hyp(g={g})",
                                  f"paper {report.totals.paper_total}, fp {report.totals.fp_total}")
    return report


def sector_totals(g: int) -> Tuple[int, int]:
    """(number of sectors, sum of coarse Betti totals) straight from the enumeration."""
    sectors = sectors_hyp(g)
    return len(sectors), sum(s.coarse.poincare.total() for s in sectors)
