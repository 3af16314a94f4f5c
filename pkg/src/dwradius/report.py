"""Report rows, the published comparison table, and text/csv/jsonl rendering."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .builtins import builtin_matrix
from .config import DEFAULT, SearchConfig
from .quantities import NRProfile

DIGITS = 9
FORMATS = ("table", "csv", "jsonl")

# Squared upper bounds as printed in the published comparison table (rows x matrices).
TABLE_ROWS = ("thm2.8upper", "cor2.13ii", "thm2.16i", "thm2.16ii", "thm2.19")
TABLE_MATRICES = ("t1", "t2", "t3", "t4")
TABLE_EXPECTED = {
    "thm2.8upper": ("21.357", "17.944", "5.4753", "9.056"),
    "cor2.13ii": ("18.5", "18", "5.5495", "9.272"),
    "thm2.16i": ("20", "20", "6", "9.472"),
    "thm2.16ii": ("19", "18", "5.6", "9.162"),
    "thm2.19": ("18.25", "17", "5.4568", "9.104"),
}
TABLE_TOL = 5e-3


def fmt(x: float) -> str:
    return f"{float(x):.{DIGITS}g}"


@dataclass
class ReportRow:
    matrix_label: str
    entries: dict  # id -> {"kind", "value", "squared"}
    dw_estimate: float
    certification_gap: float

    @classmethod
    def from_catalog(cls, label: str, catalog: list[bounds.BoundResult]) -> "ReportRow":
        entries = {b.id: {"kind": b.kind, "value": b.value, "squared": b.squared} for b in catalog}
        dw = next(b.value for b in catalog if b.kind == bounds.ESTIMATE)
        uppers = [b.value for b in catalog if b.kind == bounds.UPPER]
        gap = (min(uppers) - dw) if uppers else float("inf")
        return cls(label, entries, dw, gap)


def catalog_violations(catalog: list[bounds.BoundResult], tol: float = 1e-6) -> list[str]:
    dw = next(b.value for b in catalog if b.kind == bounds.ESTIMATE)
    out = []
    for b in catalog:
        if b.kind == bounds.LOWER and b.value > dw + tol:
            out.append(f"{b.id}: lower bound {fmt(b.value)} exceeds dw estimate {fmt(dw)}")
        if b.kind == bounds.UPPER and b.value < dw - tol:
            out.append(f"{b.id}: upper bound {fmt(b.value)} is below dw estimate {fmt(dw)}")
    return out


# ---------------------------------------------------------------- comparison table


@dataclass
class TableCell:
    row: str
    matrix: str
    computed: float  # squared scale
    expected: str

    @property
    def error(self) -> float:
        return abs(self.computed - float(self.expected))

    @property
    def ok(self) -> bool:
        return self.error <= TABLE_TOL


@dataclass
class ComparisonTable:
    cells: list = field(default_factory=list)

    @property
    def mismatches(self) -> list[TableCell]:
        return [c for c in self.cells if not c.ok]

    def cell(self, row: str, matrix: str) -> TableCell:
        return next(c for c in self.cells if c.row == row and c.matrix == matrix)


def _table_bounds(T: np.ndarray, config: SearchConfig) -> dict[str, float]:
    found = {b.id: b for b in (*bounds.bounds_thm28(T, config), *bounds.upper_cor213(T),
                               *bounds.upper_thm216(T, config), bounds.upper_thm219(T, config))}
    return {row: found[row].squared for row in TABLE_ROWS}


def comparison_table(config: SearchConfig = DEFAULT) -> ComparisonTable:
    table = ComparisonTable()
    for j, name in enumerate(TABLE_MATRICES):
        values = _table_bounds(builtin_matrix(name), config)
        for row in TABLE_ROWS:
            table.cells.append(TableCell(row, name, values[row], TABLE_EXPECTED[row][j]))
    return table


# ---------------------------------------------------------------- rendering


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


PROFILE_FIELDS = ("op_norm", "min_modulus", "num_radius", "crawford", "dw_estimate")


def render_analysis(label: str, profile: NRProfile, catalog: list[bounds.BoundResult],
                    fmt_name: str) -> str:
    row = ReportRow.from_catalog(label, catalog)
    if fmt_name == "jsonl":
        lines = [{"type": "profile", "matrix": label,
                  **{k: float(getattr(profile, k)) for k in PROFILE_FIELDS},
                  "certification_gap": row.certification_gap}]
        lines += [{"type": "bound", "matrix": label, "id": b.id, "kind": b.kind,
                   "value": b.value, "squared": b.squared, "citation": b.citation}
                  for b in catalog]
        return "".join(json.dumps(x, sort_keys=True) + "\n" for x in lines)
    prof = [[k, fmt(getattr(profile, k))] for k in PROFILE_FIELDS]
    prof.append(["certification_gap", fmt(row.certification_gap)])
    body = [[b.id, b.kind, fmt(b.value), fmt(b.squared)] for b in catalog]
    if fmt_name == "csv":
        rows = [["section", "id", "kind", "value", "squared"]]
        rows += [["profile", k, "", v, ""] for k, v in prof]
        rows += [["bound", *r] for r in body]
        return _csv(rows)
    out = f"matrix {label}\n" + _align([["quantity", "value"], *prof]) + "\n"
    return out + _align([["id", "kind", "dw", "dw^2"], *body])


def render_table(table: ComparisonTable, fmt_name: str) -> str:
    if fmt_name == "jsonl":
        return "".join(json.dumps({"row": c.row, "matrix": c.matrix, "computed": c.computed,
                                   "expected": float(c.expected), "ok": c.ok}, sort_keys=True) + "\n"
                       for c in table.cells)
    header = ["bound (dw^2)", *TABLE_MATRICES]
    rows = [[r, *(fmt(table.cell(r, m).computed) for m in TABLE_MATRICES)] for r in TABLE_ROWS]
    if fmt_name == "csv":
        return _csv([header, *rows])
    out = _align([header, *rows])
    if table.mismatches:
        out += "\nmismatches (computed vs expected):\n"
        out += "".join(f"  {c.row} {c.matrix}: {fmt(c.computed)} vs {c.expected}\n" for c in table.mismatches)
    else:
        out += f"\nall {len(table.cells)} cells within {TABLE_TOL} of the reference values\n"
    return out


def render_block(label: str, assembled_dw: float, formulas: dict, fmt_name: str) -> str:
    """Each numeric formula gets a check column: |exact - dw| for exact values, else the bound margin."""
    rows = []
    for key, value in formulas.items():
        if isinstance(value, str):
            rows.append((key, value, None))
        elif key.endswith("exact"):
            rows.append((key, value, abs(value - assembled_dw)))
        elif key.endswith("lower"):
            rows.append((key, value, assembled_dw - value))
        else:
            rows.append((key, value, value - assembled_dw))
    if fmt_name == "jsonl":
        lines = [{"type": "assembled", "block": label, "dw_estimate": assembled_dw}]
        lines += [{"type": "formula", "block": label, "name": k, "value": v, "check": c}
                  for k, v, c in rows]
        return "".join(json.dumps(x, sort_keys=True) + "\n" for x in lines)
    text = [[k, v if isinstance(v, str) else fmt(v), "" if c is None else fmt(c)] for k, v, c in rows]
    head = [["name", "value", "check"], ["assembled.dw", fmt(assembled_dw), ""]]
    if fmt_name == "csv":
        return _csv([*head, *text])
    return f"block {label}\n" + _align([*head, *text])
