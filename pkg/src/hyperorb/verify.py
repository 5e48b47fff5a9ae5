"""Law checks run by ``hyperorb verify`` for each genus."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from . import assembler
from .ages import age_oracle, cotangent_weights
from .assembler import (
    Grading,
    Mode,
    ReconciliationError,
    formula_terms,
    pcr_first_principles,
    pcr_paper,
    pcr_paper_by_sector,
    reconcile,
    sector_totals,
    stringy_chow,
)
from .exactnum import decompositions, phi
from .hyp_inertia import SectorKind, iota_map, sectors_hyp
from .m0n_inertia import Symmetry, sectors_m0n

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenusResult:
    g: int
    ok: bool
    sectors: int
    total: int
    law: Optional[str] = None
    sector_id: Optional[str] = None
    detail: Optional[str] = None

    @property
    def message(self) -> str:
        if self.ok:
            return f"g={self.g}: ok ({self.sectors} sectors, total {self.total})"
        return f"g={self.g}: {self.law} violated at {self.sector_id}: {self.detail}"


def _fail(law: str, where: str, detail: str) -> None:
    raise ReconciliationError(law, where, detail)


def _check_iota(sectors) -> None:
    partners = iota_map(sectors)
    for s in sectors:
        p = partners[s]
        if partners[p] != s:
            _fail("iota-involution", s.sector_id, f"iota(iota(s)) is {partners[p].sector_id}")
        if (p.N, p.k, p.a, p.lam, p.coarse) != (s.N, s.k, s.a, s.lam, s.coarse):
            _fail("iota-preserves", s.sector_id, f"partner {p.sector_id} changes (N, k, a, lambda, coarse)")


def _check_class_independence(g: int, sectors, age_of) -> None:
    by_sign = {}
    for s in sectors:
        if s.kind is not SectorKind.TWISTED:
            continue
        age = age_of(s)
        for u in s.label.members:
            member_age = age_oracle(cotangent_weights(g, s.N, s.a, u % s.N))
            if member_age != age:
                _fail("class-independence", s.sector_id,
                      f"member {u} has age {member_age}, sector age {age}")
        if s.lam is not None:
            key = (s.N, s.k, s.a, s.label)
            if key in by_sign and by_sign[key] != age:
                _fail("lambda-independence", s.sector_id,
                      f"age {age} differs from the opposite sign's {by_sign[key]}")
            by_sign[key] = age


def _check_counts(g: int, sectors) -> None:
    n = 2 * g + 2
    counts = Counter((s.N, s.k, s.a) for s in sectors if s.kind is SectorKind.TWISTED)
    for N in range(3, n + 1):
        for k, a in decompositions(n, N):
            expected = 2 * phi(N) if a == 1 else phi(N)
            found = counts.get((N, k, a), 0)
            if found != expected:
                _fail("sector-count", f"hyp(g={g}) N={N} k={k} a={a}",
                      f"{found} sectors, expected {expected}")


def _check_covering(g: int, sectors) -> None:
    """Twisted hyp sectors double the sectors of the unordered branch-point stack."""
    n = 2 * g + 2
    hyp = Counter((s.N, s.k, s.a, s.coarse) for s in sectors if s.kind is SectorKind.TWISTED)
    expected: Counter = Counter()
    for m in sectors_m0n(n):
        coarse = m.coarse
        if m.N == 2 and g % 2 == 0:
            coarse = type(coarse)(coarse.k, Symmetry.TWO_FIXED)
            expected[(m.N, m.k, m.a, coarse)] += 1
        else:
            expected[(m.N, m.k, m.a, coarse)] += 2
    if hyp != expected:
        key = min((c for c in set(hyp) | set(expected) if hyp[c] != expected[c]),
                  key=lambda c: (c[0], c[1], c[2], c[3].symmetry.value))
        N, k, a, coarse = key
        _fail("covering", f"hyp(g={g}) N={N} k={k} a={a}",
              f"{hyp[key]} sectors over {coarse.describe()}, expected {expected[key]}")


def _check_totals(g: int, age_of) -> int:
    count, coarse_total = sector_totals(g)
    paper = pcr_paper(g)
    real = pcr_first_principles(g, Grading.REAL, age_of)
    cplx = pcr_first_principles(g, Grading.COMPLEX, age_of)
    totals = {"paper": paper.total(), "fp-real": real.total(), "fp-complex": cplx.total()}
    if len(set(totals.values()) | {coarse_total}) != 1:
        _fail("mode-equal-totals", f"hyp(g={g})", f"{totals}, coarse sum {coarse_total}")
    for name, p in (("paper", paper), ("fp-real", real), ("fp-complex", cplx)):
        if p.constant_term != 2:
            _fail("constant-term", f"hyp(g={g})", f"{name} constant term is {p.constant_term}")
        if p.degree > 3 * (2 * g - 1):
            _fail("exponent-bounds", f"hyp(g={g})", f"{name} has degree {p.degree} above {3 * (2 * g - 1)}")
    if pcr_paper_by_sector(g) != paper:
        _fail("paper-bookkeeping", f"hyp(g={g})", "per-sector assembly differs from the closed formula")
    stringy = {
        "paper": stringy_chow(g, Mode.PAPER).total(),
        "fp": stringy_chow(g, Mode.FIRST_PRINCIPLES, Grading.REAL, age_of).total(),
    }
    if set(stringy.values()) != {count} or sum(t.multiplicity for t in formula_terms(g)) != count:
        _fail("stringy-count", f"hyp(g={g})", f"{stringy} against {count} sectors")
    return paper.total()


def check_genus(g: int) -> GenusResult:
    """Run every law for one genus; the first violation is returned, not raised."""
    age_of = assembler.resolve_age()
    sectors = sectors_hyp(g)
    try:
        reconcile(g, age_of)
        _check_iota(sectors)
        _check_class_independence(g, sectors, age_of)
        _check_counts(g, sectors)
        _check_covering(g, sectors)
        total = _check_totals(g, age_of)
    except ReconciliationError as exc:
        logger.error("verify g=%d law=%s sector=%s", g, exc.law, exc.sector_id)
        return GenusResult(g=g, ok=False, sectors=len(sectors), total=0,
                           law=exc.law, sector_id=exc.sector_id, detail=exc.detail)
    logger.debug("verify g=%d ok sectors=%d total=%d", g, len(sectors), total)
    return GenusResult(g=g, ok=True, sectors=len(sectors), total=total)


def first_failure(results) -> Optional[GenusResult]:
    return next((r for r in results if not r.ok), None)

