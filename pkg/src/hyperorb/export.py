"""Rendering of command results as JSON, CSV, LaTeX or aligned text.

Every command builds a :class:`Document`: a JSON payload plus the same data laid
out as headline polynomials and tables for the tabular formats. Rationals are
written as ``{"num", "den"}`` pairs in JSON and never as decimals.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

from .ages import exponent_paper, sector_age
from .hyp_inertia import HypSector, SectorKind
from .m0n_inertia import M0nSector
from .qpoly import QPolynomial, render, render_latex

Sector = Union[HypSector, M0nSector]


@dataclass
class Table:
    title: str
    columns: List[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)


@dataclass
class Document:
    command: str
    payload: Any
    polynomials: List[Tuple[str, QPolynomial]] = field(default_factory=list)
    tables: List[Table] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)


# --- JSON ------------------------------------------------------------------------

def rational_json(x: Fraction | int) -> Dict[str, int]:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def polynomial_json(p: QPolynomial) -> List[Dict[str, Any]]:
    return [{"exp": rational_json(e), "coeff": c} for e, c in p.terms()]


def to_jsonable(value: Any) -> Any:
    """Recursively convert results into plain JSON types."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_json(value)
    if isinstance(value, QPolynomial):
        return polynomial_json(value)
    if isinstance(value, Enum):
        return value.value
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def sector_json(sector: Sector) -> Dict[str, Any]:
    """One sector in the stable record layout shared by both stacks."""
    if isinstance(sector, M0nSector):
        g, n, full_order, lam, age, exponent, kind = None, sector.n, None, None, None, None, "TWISTED"
    else:
        g, n, full_order, lam, kind = sector.g, sector.n, sector.full_order, sector.lam, sector.kind.value
        age = rational_json(sector_age(sector))
        exponent = None if sector.kind is SectorKind.UNTWISTED else rational_json(exponent_paper(sector))
    return {
        "stack": "m0n" if isinstance(sector, M0nSector) else "hyp",
        "g": g,
        "n": n,
        "N": sector.N,
        "full_order": full_order,
        "k": sector.k,
        "a": sector.a,
        "label": {
            "modulus": sector.label.modulus,
            "members": list(sector.label.members),
            "kind": sector.label.kind.value,
        },
        "lambda": lam,
        "coarse": {
            "k": sector.coarse.k,
            "symmetry": sector.coarse.symmetry.value,
            "dimension": sector.coarse.dimension,
        },
        "age": age,
        "exponent_paper": exponent,
        "sector_kind": kind,
    }


def sector_row(sector: Sector) -> Dict[str, Any]:
    """Flat table row for a sector (the tabular counterpart of sector_json)."""
    row: Dict[str, Any] = {"N": sector.N}
    if isinstance(sector, HypSector):
        row["full_order"] = sector.full_order
    row.update({
        "k": sector.k,
        "a": sector.a,
        "label": " ".join(str(u) for u in sector.label.members) + f" mod {sector.label.modulus}",
    })
    if isinstance(sector, HypSector):
        row["lambda"] = None if sector.lam is None else f"{sector.lam:+d}"
        row["kind"] = sector.kind.value
    row["coarse"] = sector.coarse.describe()
    row["dimension"] = sector.coarse.dimension
    return row


# --- cell formatting ---------------------------------------------------------------

def _cell_text(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, QPolynomial):
        return render(value)
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


_LATEX_SPECIALS = {"\\": r"\textbackslash{}", "&": r"\&", "%": r"\%", "$": r"\$",
                   "#": r"\#", "_": r"\_", "{": r"\{", "}": r"\}", "^": r"\^{}", "~": r"\~{}"}


def latex_escape(text: str) -> str:
    return "".join(_LATEX_SPECIALS.get(ch, ch) for ch in text)


def _cell_latex(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, QPolynomial):
        return f"${render_latex(value)}$"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return f"${value.numerator}$"
        sign = "-" if value < 0 else ""
        return f"${sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}$"
    return latex_escape(_cell_text(value))


# --- renderers -----------------------------------------------------------------------

def render_json(doc: Document) -> str:
    return json.dumps(to_jsonable(doc.payload), indent=2, sort_keys=False) + "\n"


def render_csv(doc: Document) -> str:
    """Tables one after another, separated by a blank line; polynomials first as term tables."""
    buf = io.StringIO()
    blocks = [_polynomial_table(name, p) for name, p in doc.polynomials] + doc.tables
    for idx, table in enumerate(blocks):
        if idx:
            buf.write("\n")
        writer = csv.DictWriter(buf, fieldnames=table.columns, lineterminator="\n")
        writer.writeheader()
        for row in table.rows:
            writer.writerow({c: _cell_text(row.get(c)) for c in table.columns})
    return buf.getvalue()


def _polynomial_table(name: str, p: QPolynomial) -> Table:
    rows = [{"polynomial": name, "exponent": e, "coeff": c} for e, c in p.terms()]
    return Table(title=name, columns=["polynomial", "exponent", "coeff"], rows=rows)


def render_latex_doc(doc: Document) -> str:
    lines: List[str] = []
    for name, p in doc.polynomials:
        lines.append(f"% {name}")
        lines.append(f"\\[ {render_latex(p)} \\]")
        lines.append("")
    for table in doc.tables:
        lines.append(f"% {table.title}")
        lines.append("\\begin{tabular}{" + "l" * len(table.columns) + "}")
        lines.append("\\hline")
        lines.append(" & ".join(latex_escape(c) for c in table.columns) + " \\\\")
        lines.append("\\hline")
        for row in table.rows:
            lines.append(" & ".join(_cell_latex(row.get(c)) for c in table.columns) + " \\\\")
        lines.append("\\hline")
        lines.append("\\end{tabular}")
        lines.append("")
    for note in doc.notes:
        lines.append(f"% {note}")
    return "\n".join(lines).rstrip("\n") + "\n"


def render_text(doc: Document) -> str:
    lines: List[str] = []
    for name, p in doc.polynomials:
        lines.append(f"{name}: {render(p)}")
    for table in doc.tables:
        if lines:
            lines.append("")
        lines.append(f"== {table.title} ==")
        lines.extend(_aligned(table.columns, [[_cell_text(r.get(c)) for c in table.columns] for r in table.rows]))
    if doc.notes:
        lines.append("")
        lines.extend(doc.notes)
    return "\n".join(lines) + "\n"


def _aligned(columns: Sequence[str], cells: Sequence[Sequence[str]]) -> List[str]:
    widths = [len(c) for c in columns]
    for row in cells:
        widths = [max(w, len(v)) for w, v in zip(widths, row)]
    def line(values: Sequence[str]) -> str:
        return "  ".join(v.ljust(w) for v, w in zip(values, widths)).rstrip()

    return [line(columns)] + [line(row) for row in cells]


RENDERERS = {
    "json": render_json,
    "csv": render_csv,
    "latex": render_latex_doc,
    "text": render_text,
}


def render_document(doc: Document, fmt: str) -> str:
    try:
        renderer = RENDERERS[fmt]
    except KeyError as exc:
        raise ValueError(f"Unknown output format {fmt!r}") from exc
    return renderer(doc)


def merge_documents(command: str, docs: Sequence[Document]) -> Document:
    """Concatenate per-index documents in order; JSON payloads become a list."""
    if len(docs) == 1:
        return docs[0]
    merged = Document(command=command, payload=[d.payload for d in docs])
    for d in docs:
        merged.polynomials.extend(d.polynomials)
        merged.tables.extend(d.tables)
        merged.notes.extend(d.notes)
    return merged
