"""Per-index document builders behind each subcommand.

Every builder takes one index (g or n) and returns a :class:`Document`; they are
module-level so a process pool can run them.
"""
from __future__ import annotations

from collections import Counter
from typing import Dict, List

from .ages import exponent_paper
from .assembler import (
    Grading,
    Mode,
    corollary_reference,
    cr_bundle,
    hcr_corollary,
    pcr_paper,
    reconcile,
    resolve_age,
    stringy_chow,
)
from .export import Document, Table, sector_json, sector_row
from .hyp_inertia import SectorKind, sectors_by_full_order, sectors_hyp
from .m0n_inertia import sectors_m0n
from .verify import GenusResult


def _columns(rows: List[Dict]) -> List[str]:
    return list(rows[0]) if rows else []


def sectors_hyp_document(g: int) -> Document:
    sectors = sectors_hyp(g)
    rows = [sector_row(s) for s in sectors]
    payload = {"stack": "hyp", "g": g, "count": len(sectors), "sectors": [sector_json(s) for s in sectors]}
    return Document(command="sectors", payload=payload,
                    tables=[Table(f"sectors of I(H_{g}) ({len(sectors)})", _columns(rows), rows)])


def sectors_m0n_document(n: int) -> Document:
    sectors = sectors_m0n(n)
    rows = [sector_row(s) for s in sectors]
    payload = {"stack": "m0n", "n": n, "count": len(sectors), "sectors": [sector_json(s) for s in sectors]}
    return Document(command="sectors", payload=payload,
                    tables=[Table(f"twisted sectors of [M_(0,{n})/S_{n}] ({len(sectors)})", _columns(rows), rows)])


def poincare_document(g: int, mode: str, grading: str) -> Document:
    """Orbifold Poincare polynomial plus the per-sector (age, exponent, polynomial) table."""
    bundle = cr_bundle(g, mode, grading)
    mode, grading, poly = bundle.mode, Grading(grading), bundle.polynomial
    age_of = resolve_age()
    rows = []
    records = []
    for s in sectors_hyp(g):
        age = age_of(s)
        exponent = None if s.kind is SectorKind.UNTWISTED else exponent_paper(s)
        if mode is Mode.PAPER:
            shift = exponent if exponent is not None else 0
        else:
            shift = grading.factor * age
        coarse = s.coarse.poincare
        rows.append({"sector": s.sector_id, "age": age, "exponent_paper": exponent,
                     "shift": shift, "coarse_poincare": coarse})
        record = sector_json(s)
        record.update({"shift": shift, "coarse_poincare": coarse})
        records.append(record)
    payload = {"g": g, "mode": mode.value, "grading": bundle.grading,
               "polynomial": poly, "total": poly.total(), "sectors": records}
    columns = ["sector", "age", "exponent_paper", "shift", "coarse_poincare"]
    return Document(command="poincare", payload=payload, polynomials=[(bundle.label, poly)],
                    tables=[Table(f"sector shifts g={g}", columns, rows)],
                    notes=[f"total dimension: {poly.total()}"])


def stringy_document(g: int, mode: str, grading: str) -> Document:
    mode = Mode(mode)
    used = None if mode is Mode.PAPER else Grading(grading)
    poly = stringy_chow(g, mode, grading)
    name = f"stringy Chow(H_{g}) mode={mode.value}" + (f" grading={used.value}" if used else "")
    payload = {"g": g, "mode": mode.value, "grading": used,
               "polynomial": poly, "total": poly.total(), "sector_count": len(sectors_hyp(g))}
    return Document(command="stringy", payload=payload, polynomials=[(name, poly)],
                    notes=[f"total dimension: {poly.total()}"])


def corollary_document(g: int) -> Document:
    value = hcr_corollary(g)
    terms = corollary_reference(g)
    reference = pcr_paper(g).total()
    rows = [{"N": t.N, "k": t.k, "a": t.a, "phi": t.phi,
             "floor_literal": t.floor_literal, "floor_clamped": t.floor_clamped} for t in terms]
    payload = {"g": g, "literal": value.literal, "clamped": value.clamped,
               "reference": reference, "informational": True, "terms": terms}
    return Document(command="corollary", payload=payload,
                    tables=[Table(f"floor terms g={g}", _columns(rows), rows)],
                    notes=[f"g={g}: literal {value.literal}, clamped {value.clamped}, "
                           f"reference {reference} (informational)"])


def reconcile_document(g: int) -> Document:
    report = reconcile(g)
    rows = [{"sector": r.sector_id, "exponent_paper": r.exponent_paper, "age": r.age,
             "twice_age": r.twice_age, "difference": r.difference, "predicted": r.predicted,
             "convention": r.convention} for r in report.rows]
    totals = report.totals
    payload = report.to_dict()
    payload["corollary_informational"] = True
    columns = ["sector", "exponent_paper", "age", "twice_age", "difference", "predicted", "convention"]
    return Document(command="reconcile", payload=payload,
                    tables=[Table(f"reconciliation g={g}", columns, rows)],
                    notes=[f"g={g}: paper total {totals.paper_total}, first-principles total {totals.fp_total}",
                           f"g={g}: corollary literal {totals.corollary_literal}, clamped "
                           f"{totals.corollary_clamped}, gap {totals.corollary_gap} (informational)"])


def summary_document(g: int) -> Document:
    sectors = sectors_hyp(g)
    by_reduced = dict(sorted(Counter(s.N for s in sectors).items()))
    by_full = {order: len(group) for order, group in sectors_by_full_order(g).items()}
    rows = [{"g": g, "order": "reduced", "value": N, "sectors": c} for N, c in by_reduced.items()]
    rows += [{"g": g, "order": "full", "value": M, "sectors": c} for M, c in by_full.items()]
    payload = {"g": g, "sectors": len(sectors), "by_reduced_order": by_reduced,
               "by_full_order": by_full, "total": pcr_paper(g).total()}
    return Document(command="summary", payload=payload,
                    tables=[Table(f"sector counts g={g}", ["g", "order", "value", "sectors"], rows)])


def verify_document(results: List[GenusResult]) -> Document:
    rows = [{"g": r.g, "ok": r.ok, "sectors": r.sectors, "total": r.total,
             "law": r.law, "sector": r.sector_id} for r in results]
    failures = [r for r in results if not r.ok]
    last = results[-1].g if results else 2
    note = (f"all laws hold for g=2..{last}" if not failures
            else f"FAILED {failures[0].message}")
    payload = {"g_max": last, "ok": not failures, "results": results,
               "first_failure": failures[0].message if failures else None}
    return Document(command="verify", payload=payload,
                    tables=[Table("verification", ["g", "ok", "sectors", "total", "law", "sector"], rows)],
                    notes=[note])
