"""
K-relations and the relational operators.

A KRelation maps tuples over a named schema to nonzero annotations of one
instance. Every operator returns a normalized relation: zero annotations are
never stored, so the key set is exactly the support. Rows are kept in the
canonical tuple order (integers before strings, then by value).

Each column holds integers or strings, never both. Its kind is fixed by the
first value stored in it or by an explicit declaration, and survives even
when every row is filtered away.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .algebra import DiffSemantics, SemiringInstance, difference_operator
from .query import (
    AttrEq, Base, ColumnKind, Diff, DomainValue, Join, Predicate, Project, QueryExpr, Rename, Schema,
    Select, Union, check_rename, infer_schema, merge_kinds, predicate_kind_problem, schema_error,
    value_kind,
)
from ..utils.constants import LOGGER_NAME, ERROR_SCHEMA, ERROR_SCHEMA_SUGGESTION
from ..utils.error_handler import SchemaError

__all__ = [
    "KRelation", "Database", "DiffSemantics", "op_union", "op_join", "op_project",
    "op_select", "op_rename", "op_diff", "eval_query", "value_key",
]

logger = logging.getLogger(LOGGER_NAME)

Row = Tuple[DomainValue, ...]


def value_key(value: DomainValue) -> Tuple[int, Any]:
    return (0, value) if isinstance(value, int) else (1, value)


def row_key(row: Row) -> Tuple[Tuple[int, Any], ...]:
    return tuple(value_key(v) for v in row)


def _error(where: str, reason: str) -> SchemaError:
    return SchemaError(ERROR_SCHEMA.format(node=where, reason=reason), "schema_error", ERROR_SCHEMA_SUGGESTION)


def _check_value(value: Any) -> DomainValue:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise _error("tuple", f"domain values are integers or strings, got {value!r}")
    return value


class KRelation:
    """Immutable annotated relation."""

    __slots__ = ("schema", "instance", "kinds", "_rows")

    def __init__(self, instance: SemiringInstance, schema: Sequence[str],
                 rows: Iterable[Tuple[Sequence[DomainValue], Any]] = (),
                 kinds: Optional[Sequence[ColumnKind]] = None):
        schema = tuple(schema)
        if len(set(schema)) != len(schema):
            raise _error("schema", f"duplicate attribute in ({', '.join(schema)})")
        if any(not isinstance(a, str) or not a for a in schema):
            raise _error("schema", "attribute names must be nonempty strings")
        column_kinds = list(kinds) if kinds is not None else [None] * len(schema)
        if len(column_kinds) != len(schema):
            raise _error("schema", f"{len(column_kinds)} column kind(s) for ({', '.join(schema)})")
        merged: Dict[Row, Any] = {}
        for values, annotation in rows:
            row = tuple(_check_value(v) for v in values)
            if len(row) != len(schema):
                raise _error("tuple", f"{row!r} does not fit schema ({', '.join(schema)})")
            for position, value in enumerate(row):
                try:
                    column_kinds[position] = merge_kinds(column_kinds[position], value_kind(value))
                except ValueError:
                    raise _error("tuple", f"column {schema[position]} mixes integers and strings")
            merged[row] = instance.add(merged[row], annotation) if row in merged else annotation
        ordered = sorted(((r, a) for r, a in merged.items() if not instance.is_zero(a)),
                         key=lambda item: row_key(item[0]))
        object.__setattr__(self, "schema", schema)
        object.__setattr__(self, "instance", instance)
        object.__setattr__(self, "kinds", tuple(column_kinds))
        object.__setattr__(self, "_rows", dict(ordered))

    def __setattr__(self, name, value):
        raise AttributeError("KRelation is immutable")

    @classmethod
    def empty(cls, instance: SemiringInstance, schema: Sequence[str],
              kinds: Optional[Sequence[ColumnKind]] = None) -> "KRelation":
        return cls(instance, schema, kinds=kinds)

    @classmethod
    def unit(cls, instance: SemiringInstance) -> "KRelation":
        """The join identity: the empty tuple over the empty schema, annotated 1."""
        return cls(instance, (), [((), instance.one)])

    @classmethod
    def from_dicts(cls, instance: SemiringInstance, schema: Sequence[str],
                   rows: Iterable[Tuple[Mapping[str, DomainValue], Any]]) -> "KRelation":
        schema = tuple(schema)
        return cls(instance, schema, [(tuple(t[a] for a in schema), k) for t, k in rows])

    @property
    def rows(self) -> Mapping[Row, Any]:
        return dict(self._rows)

    def items(self) -> Iterator[Tuple[Row, Any]]:
        return iter(self._rows.items())

    def annotation(self, row: Sequence[DomainValue]) -> Any:
        return self._rows.get(tuple(row), self.instance.zero)

    def support(self) -> Tuple[Row, ...]:
        return tuple(self._rows)

    def column_kinds(self) -> Dict[str, ColumnKind]:
        return dict(zip(self.schema, self.kinds))

    def tuples(self) -> Iterator[Dict[str, DomainValue]]:
        for row in self._rows:
            yield dict(zip(self.schema, row))

    def __len__(self) -> int:
        return len(self._rows)

    def __bool__(self) -> bool:
        return bool(self._rows)

    def aligned(self, schema: Sequence[str]) -> "KRelation":
        """Same relation with columns reordered to `schema` (same attribute set)."""
        schema = tuple(schema)
        if schema == self.schema:
            return self
        if set(schema) != set(self.schema) or len(schema) != len(self.schema):
            raise _error("alignment", f"({', '.join(self.schema)}) vs ({', '.join(schema)})")
        positions = [self.schema.index(a) for a in schema]
        return KRelation(self.instance, schema,
                         [(tuple(row[p] for p in positions), k) for row, k in self._rows.items()],
                         kinds=[self.kinds[p] for p in positions])

    def _comparable(self) -> Tuple[Tuple[str, ...], Dict[Row, Any]]:
        canonical = tuple(sorted(self.schema))
        return canonical, self.aligned(canonical)._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KRelation):
            return NotImplemented
        if self.instance.label != other.instance.label or set(self.schema) != set(other.schema):
            return False
        return self._comparable() == other._comparable()

    def __hash__(self) -> int:
        schema, rows = self._comparable()
        return hash((self.instance.label, schema, frozenset(rows.items())))

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(f"{a}={v}" for a, v in zip(self.schema, row)) + f" : {self.instance.render(k)}"
            for row, k in self._rows.items()
        )
        return f"KRelation({self.instance.label}, ({', '.join(self.schema)}), {{{body}}})"


Database = Dict[str, KRelation]


def _same_instance(r1: KRelation, r2: KRelation, operation: str):
    if r1.instance is not r2.instance and r1.instance.label != r2.instance.label:
        raise _error(operation, f"instances differ ({r1.instance.label} vs {r2.instance.label})")


def _same_schema(r1: KRelation, r2: KRelation, operation: str) -> KRelation:
    if set(r1.schema) != set(r2.schema) or len(r1.schema) != len(r2.schema):
        raise _error(operation, f"schemas differ: ({', '.join(r1.schema)}) vs ({', '.join(r2.schema)})")
    return r2.aligned(r1.schema)


def _shared_kinds(r1: KRelation, r2: KRelation, attrs: Sequence[str], operation: str) -> Dict[str, ColumnKind]:
    left, right = r1.column_kinds(), r2.column_kinds()
    merged = {}
    for a in attrs:
        try:
            merged[a] = merge_kinds(left[a], right[a])
        except ValueError as e:
            raise _error(operation, f"attribute {a} holds different kinds ({e})")
    return merged


def op_union(r1: KRelation, r2: KRelation) -> KRelation:
    """(R1 u R2)(t) = R1(t) + R2(t)."""
    _same_instance(r1, r2, "union")
    r2 = _same_schema(r1, r2, "union")
    kinds = _shared_kinds(r1, r2, r1.schema, "union")
    return KRelation(r1.instance, r1.schema, list(r1.items()) + list(r2.items()),
                     kinds=[kinds[a] for a in r1.schema])


def op_join(r1: KRelation, r2: KRelation) -> KRelation:
    """Natural join, hash-grouped on the shared attributes; result schema is r1's followed by r2's new attributes."""
    _same_instance(r1, r2, "join")
    inst = r1.instance
    shared = [a for a in r1.schema if a in r2.schema]
    extra = [a for a in r2.schema if a not in r1.schema]
    kinds = {**r2.column_kinds(), **r1.column_kinds(), **_shared_kinds(r1, r2, shared, "join")}
    shared_right = [r2.schema.index(a) for a in shared]
    extra_right = [r2.schema.index(a) for a in extra]
    shared_left = [r1.schema.index(a) for a in shared]

    groups: Dict[Row, list] = defaultdict(list)
    for row, k in r2.items():
        groups[tuple(row[p] for p in shared_right)].append((tuple(row[p] for p in extra_right), k))

    out = []
    for row, k1 in r1.items():
        for tail, k2 in groups.get(tuple(row[p] for p in shared_left), ()):
            out.append((row + tail, inst.mul(k1, k2)))
    schema = r1.schema + tuple(extra)
    return KRelation(inst, schema, out, kinds=[kinds[a] for a in schema])


def op_project(attrs: Sequence[str], r: KRelation) -> KRelation:
    """(pi_V R)(t) sums R(t') over the t' that restrict to t."""
    attrs = tuple(attrs)
    if not attrs or len(set(attrs)) != len(attrs):
        raise _error("project", "projection list must be nonempty without repeats")
    missing = [a for a in attrs if a not in r.schema]
    if missing:
        raise _error("project", f"unknown attribute(s) {', '.join(missing)}")
    positions = [r.schema.index(a) for a in attrs]
    return KRelation(r.instance, attrs, [(tuple(row[p] for p in positions), k) for row, k in r.items()],
                     kinds=[r.kinds[p] for p in positions])


def op_select(pred: Predicate, r: KRelation) -> KRelation:
    """Keeps the rows satisfying every atom; annotations are multiplied by 1."""
    missing = [a for a in pred.attributes() if a not in r.schema]
    if missing:
        raise _error("select", f"unknown attribute(s) {', '.join(missing)}")
    problem = predicate_kind_problem(pred, r.column_kinds())
    if problem:
        raise _error("select", problem)
    index = {a: i for i, a in enumerate(r.schema)}

    def passes(row: Row) -> bool:
        for atom in pred.atoms:
            if isinstance(atom, AttrEq):
                if row[index[atom.left]] != row[index[atom.right]]:
                    return False
            elif row[index[atom.attr]] != atom.value:
                return False
        return True

    return KRelation(r.instance, r.schema, [(row, k) for row, k in r.items() if passes(row)], kinds=r.kinds)


def op_rename(mapping: Mapping[str, str], r: KRelation) -> KRelation:
    try:
        schema = check_rename(dict(mapping), r.schema)
    except ValueError as e:
        raise _error("rename", str(e))
    return KRelation(r.instance, schema, r.items(), kinds=r.kinds)


def op_diff(sem: DiffSemantics, r1: KRelation, r2: KRelation) -> KRelation:
    """Per-tuple difference over the union of both supports."""
    _same_instance(r1, r2, "difference")
    r2 = _same_schema(r1, r2, "difference")
    kinds = _shared_kinds(r1, r2, r1.schema, "difference")
    inst = r1.instance
    sub = difference_operator(inst, sem)
    rows = dict.fromkeys(list(r1.support()) + list(r2.support()))
    return KRelation(inst, r1.schema, [(row, sub(r1.annotation(row), r2.annotation(row))) for row in rows],
                     kinds=[kinds[a] for a in r1.schema])


def eval_query(db: Mapping[str, KRelation], q: QueryExpr,
               sem: DiffSemantics = DiffSemantics.MONUS) -> KRelation:
    """Schema- and kind-checks `q` against `db`, then evaluates it bottom-up."""
    sem = DiffSemantics.parse(sem)
    infer_schema(q, {name: rel.schema for name, rel in db.items()},
                 {name: rel.column_kinds() for name, rel in db.items()})
    labels = {rel.instance.label for rel in db.values()}
    if len(labels) > 1:
        raise _error("database", f"relations use different instances: {', '.join(sorted(labels))}")
    return _evaluate(db, q, sem)


def _evaluate(db: Mapping[str, KRelation], q: QueryExpr, sem: DiffSemantics) -> KRelation:
    if isinstance(q, Base):
        return db[q.name]
    if isinstance(q, Union):
        return op_union(_evaluate(db, q.left, sem), _evaluate(db, q.right, sem))
    if isinstance(q, Join):
        return op_join(_evaluate(db, q.left, sem), _evaluate(db, q.right, sem))
    if isinstance(q, Diff):
        return op_diff(sem, _evaluate(db, q.left, sem), _evaluate(db, q.right, sem))
    if isinstance(q, Project):
        return op_project(q.attrs, _evaluate(db, q.child, sem))
    if isinstance(q, Select):
        return op_select(q.predicate, _evaluate(db, q.child, sem))
    if isinstance(q, Rename):
        return op_rename(dict(q.mapping), _evaluate(db, q.child, sem))
    raise schema_error(q, "unknown node")
