from fractions import Fraction as F

from hyperorb.reports import (
    corollary_document,
    poincare_document,
    reconcile_document,
    sectors_hyp_document,
    sectors_m0n_document,
    stringy_document,
    summary_document,
    verify_document,
)
from hyperorb.verify import check_genus


def test_sector_documents():
    doc = sectors_hyp_document(2)
    assert doc.payload["count"] == 18 and len(doc.tables[0].rows) == 18
    assert doc.tables[0].columns == ["N", "full_order", "k", "a", "label", "lambda", "kind", "coarse", "dimension"]
    doc = sectors_m0n_document(6)
    assert doc.payload["count"] == 9
    assert doc.tables[0].columns == ["N", "k", "a", "label", "coarse", "dimension"]


def test_poincare_document_rows():
    doc = poincare_document(2, "fp", "complex")
    assert doc.payload["total"] == 23
    shifts = [row["shift"] for row in doc.tables[0].rows]
    assert shifts[:3] == [0, 0, F(1, 2)]
    paper = poincare_document(2, "paper", "real")
    witness = next(r for r in paper.tables[0].rows if "N=3" in r["sector"])
    assert (witness["age"], witness["exponent_paper"], witness["shift"]) == (1, 4, 4)


def test_stringy_document():
    assert stringy_document(3, "paper", "real").payload["total"] == 28
    assert stringy_document(3, "fp", "real").payload["sector_count"] == 28


def test_corollary_document():
    payload = corollary_document(2).payload
    assert (payload["literal"], payload["clamped"], payload["reference"]) == (7, 15, 23)
    assert payload["informational"] is True


def test_reconcile_document_notes_gap():
    doc = reconcile_document(2)
    assert len(doc.tables[0].rows) == 16
    assert "gap 16 (informational)" in doc.notes[1]


def test_summary_document():
    payload = summary_document(2).payload
    assert payload["by_reduced_order"] == {1: 2, 2: 2, 3: 2, 4: 2, 5: 8, 6: 2}
    assert payload["by_full_order"] == {1: 1, 2: 2, 3: 1, 4: 1, 5: 4, 6: 3, 8: 2, 10: 4}


def test_verify_document():
    doc = verify_document([check_genus(2), check_genus(3)])
    assert doc.payload["ok"] is True
    assert doc.notes == ["all laws hold for g=2..3"]
