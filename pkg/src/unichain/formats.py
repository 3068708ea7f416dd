"""Stable file formats: table documents, decomposition documents, and the
structured (JSON) report form shared by the CLI.

Table document, bit-exact:

    scale 4
    neutral 2
    0 0 0 0 0
    0 1 1 1 1
    0 1 2 3 4
    0 1 3 3 4
    0 1 4 4 4

``#`` starts a comment anywhere; the full square is required and the
symmetric redundancy is checked, with positioned messages on rejection.
A decomposition document carries a small header (case, scale, e1, e2),
two embedded table blocks introduced by ``inner`` and ``boundary``, and a
``selection`` block of ``x y first|second`` lines.
"""

from __future__ import annotations

import json

from .core import CheckReport, ChainScale, OpTable, Uninorm, Violation
from .distributivity import ClassifyResult, Decomposition, Pick, TheoremCase
from .errors import TableFormatError
from .search import CertificationReport

FORMAT_VERSION = 1


# --- table text format ------------------------------------------------------

def dump_table(u: Uninorm) -> str:
    lines = [f"scale {u.n}", f"neutral {u.e}"]
    lines.extend(" ".join(str(v) for v in row) for row in u.rows)
    return "\n".join(lines) + "\n"


class _Lines:
    """Comment-stripping line reader that remembers source positions."""

    def __init__(self, text: str, source: str):
        self.source = source
        self.items = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            content = raw.split("#", 1)[0].strip()
            if content:
                self.items.append((lineno, content))
        self.pos = 0

    def next(self, expectation: str):
        if self.pos >= len(self.items):
            raise TableFormatError(f"unexpected end of input, expected {expectation}",
                                   None, self.source)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def done(self) -> bool:
        return self.pos >= len(self.items)

    def error(self, message: str, lineno: int | None):
        raise TableFormatError(message, lineno, self.source)


def _read_keyword_int(lines: _Lines, keyword: str) -> int:
    lineno, content = lines.next(f"'{keyword} <integer>'")
    parts = content.split()
    if len(parts) != 2 or parts[0] != keyword:
        lines.error(f"expected '{keyword} <integer>', got {content!r}", lineno)
    try:
        return int(parts[1])
    except ValueError:
        lines.error(f"{keyword} value {parts[1]!r} is not an integer", lineno)


def _read_table_block(lines: _Lines):
    n = _read_keyword_int(lines, "scale")
    if n < 1:
        lines.error(f"scale must be at least 1, got {n}", lines.items[lines.pos - 1][0])
    e = _read_keyword_int(lines, "neutral")
    if not 0 <= e <= n:
        lines.error(f"neutral {e} outside chain 0..{n}", lines.items[lines.pos - 1][0])
    rows = []
    row_lines = []
    for x in range(n + 1):
        lineno, content = lines.next(f"row {x} of the table")
        parts = content.split()
        if len(parts) != n + 1:
            lines.error(f"row {x} has {len(parts)} entries, expected {n + 1}", lineno)
        row = []
        for y, p in enumerate(parts):
            try:
                v = int(p)
            except ValueError:
                lines.error(f"row {x}, entry {y}: {p!r} is not an integer", lineno)
            if not 0 <= v <= n:
                lines.error(f"row {x}, entry {y}: value {v} outside 0..{n}", lineno)
            row.append(v)
        rows.append(tuple(row))
        row_lines.append(lineno)
    for x in range(n + 1):
        for y in range(x + 1, n + 1):
            if rows[x][y] != rows[y][x]:
                lines.error(
                    f"asymmetry: row {y}, entry {x} is {rows[y][x]} but row {x}, "
                    f"entry {y} is {rows[x][y]}", row_lines[y])
    return OpTable(ChainScale(n), tuple(rows)), e


def parse_table(text: str, source: str = "<input>"):
    """Parse a table document into (OpTable, neutral index).

    Structure (shape, range, symmetry) is checked here with positioned
    errors; the uninorm axioms are not, so feed the result to
    ``validate_uninorm`` or ``Uninorm.checked``.
    """
    lines = _Lines(text, source)
    table, e = _read_table_block(lines)
    if not lines.done():
        lines.error(f"unexpected trailing content {lines.items[lines.pos][1]!r}",
                    lines.items[lines.pos][0])
    return table, e


# --- decomposition text format ----------------------------------------------

def dump_decomposition(d: Decomposition, scale: ChainScale, e1: int, e2: int) -> str:
    lines = [
        f"case {d.case.value}",
        f"scale {scale.n}",
        f"e1 {e1}",
        f"e2 {e2}",
        "inner",
        dump_table(d.inner).rstrip("\n"),
        "boundary",
        dump_table(d.boundary_op).rstrip("\n"),
        "selection",
    ]
    lines.extend(f"{x} {y} {pick.value}" for x, y, pick in d.selection)
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str, source: str = "<input>"):
    """Parse a decomposition document into (Decomposition, scale, e1, e2)."""
    lines = _Lines(text, source)
    lineno, content = lines.next("'case greater-neutral|less-neutral'")
    parts = content.split()
    if len(parts) != 2 or parts[0] != "case":
        lines.error(f"expected 'case <name>', got {content!r}", lineno)
    try:
        case = TheoremCase(parts[1])
    except ValueError:
        lines.error(f"unknown case {parts[1]!r}", lineno)
    n = _read_keyword_int(lines, "scale")
    e1 = _read_keyword_int(lines, "e1")
    e2 = _read_keyword_int(lines, "e2")
    for keyword in ("inner",):
        lineno, content = lines.next(f"'{keyword}'")
        if content != keyword:
            lines.error(f"expected '{keyword}', got {content!r}", lineno)
    inner_table, inner_e = _read_table_block(lines)
    lineno, content = lines.next("'boundary'")
    if content != "boundary":
        lines.error(f"expected 'boundary', got {content!r}", lineno)
    boundary_table, boundary_e = _read_table_block(lines)
    lineno, content = lines.next("'selection'")
    if content != "selection":
        lines.error(f"expected 'selection', got {content!r}", lineno)
    selection = []
    while not lines.done():
        lineno, content = lines.next("selection line")
        parts = content.split()
        if len(parts) != 3:
            lines.error(f"selection line needs 'x y first|second', got {content!r}", lineno)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            lines.error(f"selection coordinates must be integers, got {content!r}", lineno)
        try:
            pick = Pick(parts[2])
        except ValueError:
            lines.error(f"selection choice must be 'first' or 'second', got {parts[2]!r}", lineno)
        selection.append((x, y, pick))
    d = Decomposition(case, Uninorm(inner_table, inner_e),
                      Uninorm(boundary_table, boundary_e), tuple(selection))
    return d, ChainScale(n), e1, e2


# --- structured documents -----------------------------------------------------

def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def violation_doc(v: Violation) -> dict:
    return {
        "law": v.law,
        "witness": list(v.witness),
        "lhs": v.lhs,
        "rhs": v.rhs,
        "subject": v.subject,
        "detail": v.detail,
    }


def report_doc(report: CheckReport) -> dict:
    return {
        "format-version": FORMAT_VERSION,
        "kind": "check-report",
        "verdict": report.verdict,
        "violations": [violation_doc(v) for v in report.violations],
    }


def table_doc(u: Uninorm) -> dict:
    return {
        "format-version": FORMAT_VERSION,
        "kind": "table",
        "scale": u.n,
        "neutral": u.e,
        "rows": [list(row) for row in u.rows],
    }


def pair_check_doc(result: ClassifyResult) -> dict:
    divergence = result.divergence()
    return {
        "format-version": FORMAT_VERSION,
        "kind": "pair-check",
        "case": result.case.value,
        "distributive": result.exhaustive.verdict,
        "conditions": report_doc(result.conditions),
        "exhaustive": report_doc(result.exhaustive),
        "agreement": result.agreement,
        "divergence": None if divergence is None else violation_doc(divergence),
    }


def decomposition_doc(d: Decomposition, scale: ChainScale, e1: int, e2: int) -> dict:
    return {
        "format-version": FORMAT_VERSION,
        "kind": "decomposition",
        "case": d.case.value,
        "scale": scale.n,
        "e1": e1,
        "e2": e2,
        "inner": table_doc(d.inner),
        "boundary": table_doc(d.boundary_op),
        "selection": [[x, y, pick.value] for x, y, pick in d.selection],
    }


def certification_doc(report: CertificationReport, *, include_timing: bool = True) -> dict:
    doc = {
        "format-version": FORMAT_VERSION,
        "kind": "certification",
        "scale": report.scale_n,
        "uninorm-counts": [[e, c] for e, c in report.uninorm_counts],
        "pairs-checked": report.pairs_checked,
        "pair-case-counts": [[case, c] for case, c in report.pair_case_counts],
        "distributive-case-counts": [[case, c] for case, c in report.distributive_case_counts],
        "agreements": report.agreements,
        "divergences": [
            {
                "e1": d.e1, "index1": d.index1, "e2": d.e2, "index2": d.index2,
                "case": d.case,
                "conditions-verdict": d.conditions_verdict,
                "exhaustive-verdict": d.exhaustive_verdict,
                "u1-rows": [list(r) for r in d.u1_rows],
                "u2-rows": [list(r) for r in d.u2_rows],
            }
            for d in report.divergences
        ],
        "nodes-expanded": report.nodes_expanded,
        "partial": report.partial,
    }
    if include_timing:
        doc["wall-time-s"] = report.wall_time_s
    return doc


# --- human-readable rendering --------------------------------------------------

def render_report(report: CheckReport) -> str:
    lines = [f"verdict: {'true' if report.verdict else 'false'}"]
    lines.extend(f"  {v.describe()}" for v in report.violations)
    return "\n".join(lines) + "\n"


def render_pair_check(result: ClassifyResult) -> str:
    agrees = "theorem agrees" if result.agreement else "THEOREM DIVERGENCE"
    lines = [
        f"distributive: {'true' if result.exhaustive.verdict else 'false'}; "
        f"case: {result.case.value}; {agrees}"
    ]
    for v in result.exhaustive.violations:
        lines.append(f"  exhaustive: {v.describe()}")
    for v in result.conditions.violations:
        lines.append(f"  conditions: {v.describe()}")
    divergence = result.divergence()
    if divergence is not None:
        lines.append(f"  {divergence.describe()}")
    return "\n".join(lines) + "\n"


def render_certification(report: CertificationReport) -> str:
    lines = [
        f"certification of L_{report.scale_n}"
        + (" (PARTIAL)" if report.partial else ""),
        "uninorms per neutral element: "
        + ", ".join(f"e={e}: {c}" for e, c in report.uninorm_counts),
        f"pairs checked: {report.pairs_checked}",
        "pairs per case: "
        + ", ".join(f"{case}: {c}" for case, c in report.pair_case_counts),
        "distributive pairs per case: "
        + ", ".join(f"{case}: {c}" for case, c in report.distributive_case_counts),
        f"agreements: {report.agreements}",
        f"divergences: {len(report.divergences)}",
        f"nodes expanded: {report.nodes_expanded}",
        f"wall time: {report.wall_time_s:.3f}s",
    ]
    for d in report.divergences:
        lines.append(f"  DIVERGENCE case {d.case} at (e1={d.e1} #{d.index1}, e2={d.e2} #{d.index2}): "
                     f"conditions={d.conditions_verdict} exhaustive={d.exhaustive_verdict}")
        lines.append(f"    u1 rows: {d.u1_rows}")
        lines.append(f"    u2 rows: {d.u2_rows}")
    return "\n".join(lines) + "\n"
