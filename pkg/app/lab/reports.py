"""
Report rendering: plain text, CSV and JSON-lines records.

Records keep the field order of REPORT_FIELD_ORDER so successive runs diff
line by line.
"""

import csv
import io
import json
from typing import Iterable, List, Sequence

from ..core.algebra import CheckReport
from ..utils.constants import REPORT_FIELD_ORDER, TABLE3_HOLDS_HEADER, TABLE3_FAILS_HEADER
from ..instances.security import render_credentials
from .embedding import MonusDiscrepancy
from .enumeration import EnumerationReport, EnumeratedStructure
from .table3 import Table3Entry, Table3Report


def format_report_text(report: CheckReport) -> str:
    semantics = f", {report.semantics}" if report.semantics else ""
    line = f"{report.subject} {report.instance} [{report.strategy}{semantics}]: {report.verdict.value}"
    if report.trials is not None:
        line += f" after {report.trials} trial(s)"
    if report.witness is not None:
        w = report.witness
        line += f"  {w.describe()}  lhs={w.rendered_lhs}  rhs={w.rendered_rhs}"
    if report.reason:
        line += f"  ({report.reason})"
    return line


def format_report_record(report: CheckReport) -> str:
    return json.dumps(report.to_record(), ensure_ascii=False, default=str)


def format_reports_csv(reports: Iterable[CheckReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(REPORT_FIELD_ORDER)
    for report in reports:
        record = report.to_record()
        witness = record["witness"]
        record["witness"] = ", ".join(f"{k}={v}" for k, v in witness.items()) if witness else None
        writer.writerow(["" if record[key] is None else record[key] for key in REPORT_FIELD_ORDER])
    return buffer.getvalue()


def render_reports(reports: Sequence[CheckReport], output_format: str) -> str:
    if output_format == "records":
        return "\n".join(format_report_record(r) for r in reports)
    if output_format == "csv":
        return format_reports_csv(reports).rstrip("\n")
    return "\n".join(format_report_text(r) for r in reports)


# --- A13 classification ---

def _entry_line(entry: Table3Entry) -> str:
    decided = entry.deciding_check
    flag = "agree" if entry.agrees else "DISAGREE"
    line = f"{entry.label}: {entry.observed} [{decided.strategy}] published {entry.claim}, {flag}"
    if decided.witness is not None:
        w = decided.witness
        line += f"; witness {w.describe()} lhs={w.rendered_lhs} rhs={w.rendered_rhs}"
    if entry.proxy is not None and entry.proxy is not decided:
        line += f"; proxy {entry.proxy.instance} {entry.proxy.verdict.value}"
    if entry.lattice_witness is not None:
        line += f"; lattice pair {entry.lattice_witness.describe()}"
    if entry.adjudication is not None:
        line += f"; adjudicated: {entry.adjudication.note}"
    return line


def render_table3(report: Table3Report) -> List[str]:
    """Two-column layout by observed verdict, then one verdict line per instance and the summary."""
    holds = [e.label for e in report.entries if e.observed == "holds"]
    fails = [e.label for e in report.entries if e.observed == "fails"]
    width = max([len(TABLE3_HOLDS_HEADER)] + [len(name) for name in holds]) + 4
    lines = [f"{TABLE3_HOLDS_HEADER:<{width}}{TABLE3_FAILS_HEADER}"]
    for row in range(max(len(holds), len(fails))):
        left = holds[row] if row < len(holds) else ""
        right = fails[row] if row < len(fails) else ""
        lines.append(f"{left:<{width}}{right}".rstrip())
    lines.append("")
    lines.extend(_entry_line(e) for e in report.entries)
    lines.append(report.summary)
    return lines


def table3_records(report: Table3Report) -> List[str]:
    out = []
    for entry in report.entries:
        record = entry.deciding_check.to_record()
        record.update({"published": entry.claim, "observed": entry.observed, "agrees": entry.agrees,
                       "adjudication": entry.adjudication.note if entry.adjudication else None})
        out.append(json.dumps(record, ensure_ascii=False, default=str))
    out.append(json.dumps({"summary": report.summary}))
    return out


# --- Enumeration ---

def _render_table(name: str, table) -> List[str]:
    n = len(table)
    header = f"  {name:>5} | " + " ".join(str(j) for j in range(n))
    return [header] + [f"  {i:>5} | " + " ".join(str(v) for v in row) for i, row in enumerate(table)]


def _structure_lines(index: int, s: EnumeratedStructure) -> List[str]:
    status = "naturally ordered" if s.naturally_ordered else "not naturally ordered"
    if s.has_monus:
        status += f", monus, A9-A12 {'hold' if s.monus_axioms_hold else 'FAIL'}, A13 {'holds' if s.a13_holds else 'fails'}"
    elif s.naturally_ordered:
        status += ", no monus"
    lines = [f"structure {index}: {status}"]
    lines += _render_table("+", s.add) + _render_table("*", s.mul)
    if s.monus is not None:
        lines += _render_table("-", s.monus)
    if s.a13_witness:
        lines.append(f"  A13 witness: {s.a13_witness}")
    return lines


def render_enumeration(report: EnumerationReport, dump: bool = False) -> List[str]:
    counts = report.counts
    lines = [
        f"order {report.order}: {counts['semirings']} commutative semiring(s) up to isomorphism",
        f"  naturally ordered: {counts['naturally_ordered']}",
        f"  with monus: {counts['with_monus']}",
        f"  satisfying A13: {counts['satisfying_a13']}",
    ]
    if dump:
        for index, structure in enumerate(report.structures):
            lines.extend(_structure_lines(index, structure))
    else:
        # order 2 always lists its m-semirings with their monus tables
        for index, structure in enumerate(report.structures):
            if report.order == 2 and structure.has_monus:
                lines.extend(_structure_lines(index, structure))
    return lines


# --- Embedding ---

def render_embedding(table, violations: Sequence[str], discrepancies: Sequence[MonusDiscrepancy]) -> List[str]:
    lines = [f"{level} -> {render_credentials(image)}" for level, image in table]
    lines.append("homomorphism: " + ("holds on all 25 pairs" if not violations else "; ".join(violations)))
    lines.append(f"monus not preserved on {len(discrepancies)} pair(s):")
    lines.extend(f"  {d.describe()}" for d in discrepancies)
    return lines
