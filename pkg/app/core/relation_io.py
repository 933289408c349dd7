"""
Relation files and text renderings.

CSV files carry attribute names in the header and, optionally, a final `@k`
column holding annotation literals. Without it every row is annotated 1.
"""

import csv
import io
import logging
import re
from pathlib import Path
from typing import Dict, Iterable, List, Sequence

from .algebra import SemiringInstance
from .krel import KRelation
from .query import DomainValue
from ..utils.constants import (
    LOGGER_NAME, ANNOTATION_COLUMN, RELATION_TEXT_SEPARATOR,
    ERROR_RELATION_FILE, ERROR_RELATION_FILE_SUGGESTION,
)
from ..utils.error_handler import AppError, InputFileError, SchemaError, validate_file_operation

logger = logging.getLogger(LOGGER_NAME)

_INTEGER = re.compile(r"[+-]?\d+")
_ATTRIBUTE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def parse_domain_value(cell: str) -> DomainValue:
    text = cell.strip()
    return int(text) if _INTEGER.fullmatch(text) else text


def _file_error(filename: str, reason: str) -> InputFileError:
    return InputFileError(
        ERROR_RELATION_FILE.format(filename=filename, reason=reason),
        "relation_file_error", ERROR_RELATION_FILE_SUGGESTION,
    )


def relation_from_csv_text(text: str, inst: SemiringInstance, source: str = "<text>") -> KRelation:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if any(cell.strip() for cell in row)]
    if not rows:
        raise _file_error(source, "missing header row")
    header = [cell.strip() for cell in rows[0]]
    annotated = bool(header) and header[-1] == ANNOTATION_COLUMN
    schema = header[:-1] if annotated else header
    if not schema:
        raise _file_error(source, "no attribute columns")
    for name in schema:
        if not _ATTRIBUTE.fullmatch(name):
            raise _file_error(source, f"invalid attribute name '{name}'")
    if len(set(schema)) != len(schema):
        raise _file_error(source, "duplicate attribute name")

    entries = []
    for line_number, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise _file_error(source, f"row {line_number} has {len(row)} cells, expected {len(header)}")
        values = [parse_domain_value(cell) for cell in (row[:-1] if annotated else row)]
        try:
            annotation = inst.read(row[-1]) if annotated else inst.one
        except AppError as e:
            raise _file_error(source, f"row {line_number}: {e.message}")
        entries.append((values, annotation))
    try:
        return KRelation(inst, schema, entries)
    except SchemaError as e:
        raise _file_error(source, e.message)


def load_relation_csv(path: str, inst: SemiringInstance) -> KRelation:
    problem = validate_file_operation(path, "read")
    if problem:
        raise problem
    with open(path, "r", encoding="utf-8", newline="") as f:
        relation = relation_from_csv_text(f.read(), inst, Path(path).name)
    logger.debug(f"Loaded {len(relation)} row(s) from {path}")
    return relation


def load_database(paths: Iterable[str], inst: SemiringInstance) -> Dict[str, KRelation]:
    """Each file becomes a relation named after its stem."""
    db: Dict[str, KRelation] = {}
    for path in paths:
        name = Path(path).stem
        if name in db:
            raise _file_error(Path(path).name, f"relation name '{name}' is used twice")
        db[name] = load_relation_csv(path, inst)
    return db


def relation_to_csv(relation: KRelation) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(relation.schema) + [ANNOTATION_COLUMN])
    for row, annotation in relation.items():
        writer.writerow([str(v) for v in row] + [relation.instance.render(annotation)])
    return buffer.getvalue()


def save_relation_csv(relation: KRelation, path: str):
    problem = validate_file_operation(path, "write")
    if problem:
        raise problem
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(relation_to_csv(relation))


def _render_tuple(schema: Sequence[str], row: Sequence[DomainValue]) -> str:
    return ", ".join(f"{a}={v}" for a, v in zip(schema, row)) if schema else "()"


def render_relation_text(relation: KRelation) -> List[str]:
    """One `tuple : annotation` line per row, in canonical row order."""
    return [f"{_render_tuple(relation.schema, row)}{RELATION_TEXT_SEPARATOR}{relation.instance.render(k)}"
            for row, k in relation.items()]


def render_relation_inline(relation: KRelation) -> str:
    """Single-line form used inside report witnesses."""
    body = "; ".join(render_relation_text(relation))
    return "{" + body + "}"
