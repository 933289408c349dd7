"""
Relational algebra expressions over K-relations.

Nodes are immutable; `infer_schema` checks a tree against the base schemas
and `to_text` prints it back in the command-line grammar, parenthesizing
only where precedence requires it.
"""

from __future__ import annotations

import typing
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from ..utils.constants import ERROR_SCHEMA, ERROR_SCHEMA_SUGGESTION
from ..utils.error_handler import SchemaError

DomainValue = typing.Union[int, str]
Schema = Tuple[str, ...]


# --- Predicates ---

@dataclass(frozen=True)
class AttrEq:
    left: str
    right: str


@dataclass(frozen=True)
class ConstEq:
    attr: str
    value: DomainValue


Atom = typing.Union[AttrEq, ConstEq]


@dataclass(frozen=True)
class Predicate:
    """Conjunction of equality atoms."""

    atoms: Tuple[Atom, ...]

    def attributes(self) -> Tuple[str, ...]:
        names = []
        for atom in self.atoms:
            names.extend((atom.left, atom.right) if isinstance(atom, AttrEq) else (atom.attr,))
        return tuple(dict.fromkeys(names))


# --- Column kinds ---

ColumnKind = typing.Optional[type]

# a column no value or declaration has fixed compares as integers
UNDECLARED_COLUMN_KIND = int


def value_kind(value: DomainValue) -> type:
    return int if isinstance(value, int) else str


def merge_kinds(left: ColumnKind, right: ColumnKind) -> ColumnKind:
    """The common kind of two columns; raises ValueError when one holds integers and the other strings."""
    if left is None or right is None or left is right:
        return left or right
    raise ValueError(f"{left.__name__} vs {right.__name__}")


def predicate_kind_problem(predicate: "Predicate", kinds: Mapping[str, ColumnKind]) -> typing.Optional[str]:
    """Reason the predicate compares an integer with a string, or None."""
    for atom in predicate.atoms:
        if isinstance(atom, AttrEq):
            left, right = kinds.get(atom.left), kinds.get(atom.right)
            if left is not None and right is not None and left is not right:
                return f"cannot compare {atom.left} ({left.__name__}) with {atom.right} ({right.__name__})"
        else:
            column = kinds.get(atom.attr) or UNDECLARED_COLUMN_KIND
            if value_kind(atom.value) is not column:
                return f"cannot compare {atom.attr} ({column.__name__}) with {format_constant(atom.value)}"
    return None


# --- Expression nodes ---

@dataclass(frozen=True)
class Base:
    name: str


@dataclass(frozen=True)
class Union:
    left: "QueryExpr"
    right: "QueryExpr"


@dataclass(frozen=True)
class Join:
    left: "QueryExpr"
    right: "QueryExpr"


@dataclass(frozen=True)
class Project:
    attrs: Tuple[str, ...]
    child: "QueryExpr"


@dataclass(frozen=True)
class Select:
    predicate: Predicate
    child: "QueryExpr"


@dataclass(frozen=True)
class Rename:
    mapping: Tuple[Tuple[str, str], ...]
    child: "QueryExpr"


@dataclass(frozen=True)
class Diff:
    left: "QueryExpr"
    right: "QueryExpr"


QueryExpr = typing.Union[Base, Union, Join, Project, Select, Rename, Diff]


def schema_error(node: QueryExpr, reason: str) -> SchemaError:
    return SchemaError(
        ERROR_SCHEMA.format(node=to_text(node), reason=reason),
        "schema_error", ERROR_SCHEMA_SUGGESTION, {"node": to_text(node)},
    )


def same_attributes(left: Schema, right: Schema) -> bool:
    return len(left) == len(right) and set(left) == set(right)


def check_rename(mapping: Mapping[str, str], schema: Schema) -> Schema:
    """The renamed schema; raises ValueError on unknown, duplicate or colliding names."""
    targets = list(mapping.values())
    if len(set(targets)) != len(targets):
        raise ValueError("rename is not injective")
    for old in mapping:
        if old not in schema:
            raise ValueError(f"unknown attribute '{old}'")
    renamed = tuple(mapping.get(a, a) for a in schema)
    if len(set(renamed)) != len(renamed):
        raise ValueError("renamed attribute collides with an existing one")
    return renamed


def infer_schema(node: QueryExpr, schemas: Mapping[str, Schema],
                 kinds: typing.Optional[Mapping[str, Mapping[str, ColumnKind]]] = None) -> Schema:
    """
    Result schema of `node`; raises SchemaError naming the offending subexpression.

    `kinds` gives the column kinds of the base relations. Selections comparing
    an integer column with a string, and joins, unions or differences pairing
    such columns, are rejected whether or not any rows exist.
    """
    return _infer(node, schemas, kinds or {})[0]


def _kind_conflicts(node: QueryExpr, shared: typing.Iterable[str], left: Dict[str, ColumnKind],
                    right: Dict[str, ColumnKind]) -> Dict[str, ColumnKind]:
    merged = {}
    for a in shared:
        try:
            merged[a] = merge_kinds(left.get(a), right.get(a))
        except ValueError as e:
            raise schema_error(node, f"attribute {a} holds different kinds ({e})")
    return merged


def _infer(node: QueryExpr, schemas: Mapping[str, Schema],
           kinds: Mapping[str, Mapping[str, ColumnKind]]) -> Tuple[Schema, Dict[str, ColumnKind]]:
    if isinstance(node, Base):
        if node.name not in schemas:
            raise schema_error(node, f"relation '{node.name}' is not bound")
        base_kinds = kinds.get(node.name, {})
        schema = tuple(schemas[node.name])
        return schema, {a: base_kinds.get(a) for a in schema}
    if isinstance(node, (Union, Diff)):
        left, left_kinds = _infer(node.left, schemas, kinds)
        right, right_kinds = _infer(node.right, schemas, kinds)
        if not same_attributes(left, right):
            raise schema_error(node, f"operands have schemas ({', '.join(left)}) and ({', '.join(right)})")
        return left, _kind_conflicts(node, left, left_kinds, right_kinds)
    if isinstance(node, Join):
        left, left_kinds = _infer(node.left, schemas, kinds)
        right, right_kinds = _infer(node.right, schemas, kinds)
        shared = [a for a in left if a in right]
        combined = {**right_kinds, **left_kinds, **_kind_conflicts(node, shared, left_kinds, right_kinds)}
        schema = left + tuple(a for a in right if a not in left)
        return schema, {a: combined[a] for a in schema}
    if isinstance(node, Project):
        child, child_kinds = _infer(node.child, schemas, kinds)
        if not node.attrs:
            raise schema_error(node, "projection list is empty")
        if len(set(node.attrs)) != len(node.attrs):
            raise schema_error(node, "projection list repeats an attribute")
        missing = [a for a in node.attrs if a not in child]
        if missing:
            raise schema_error(node, f"unknown attribute(s) {', '.join(missing)}")
        return tuple(node.attrs), {a: child_kinds[a] for a in node.attrs}
    if isinstance(node, Select):
        child, child_kinds = _infer(node.child, schemas, kinds)
        missing = [a for a in node.predicate.attributes() if a not in child]
        if missing:
            raise schema_error(node, f"unknown attribute(s) {', '.join(missing)}")
        problem = predicate_kind_problem(node.predicate, child_kinds)
        if problem:
            raise schema_error(node, problem)
        return child, child_kinds
    if isinstance(node, Rename):
        child, child_kinds = _infer(node.child, schemas, kinds)
        try:
            renamed = check_rename(dict(node.mapping), child)
        except ValueError as e:
            raise schema_error(node, str(e))
        return renamed, {new: child_kinds[old] for old, new in zip(child, renamed)}
    raise TypeError(f"not a query node: {node!r}")


def base_names(node: QueryExpr) -> Tuple[str, ...]:
    if isinstance(node, Base):
        return (node.name,)
    if isinstance(node, (Union, Join, Diff)):
        return tuple(dict.fromkeys(base_names(node.left) + base_names(node.right)))
    return base_names(node.child)


# --- Printing ---

_EXPR, _TERM, _FACTOR = 0, 1, 2


def format_constant(value: DomainValue) -> str:
    if isinstance(value, int):
        return str(value)
    quote = '"' if "'" in value else "'"
    return f"{quote}{value}{quote}"


def format_predicate(predicate: Predicate) -> str:
    parts = []
    for atom in predicate.atoms:
        if isinstance(atom, AttrEq):
            parts.append(f"{atom.left}={atom.right}")
        else:
            parts.append(f"{atom.attr}={format_constant(atom.value)}")
    return ",".join(parts)


def to_text(node: QueryExpr) -> str:
    """Prints `node` so that the query parser reads back the same tree."""
    return _emit(node, _EXPR)


def _emit(node: QueryExpr, level: int) -> str:
    if isinstance(node, Base):
        return node.name
    if isinstance(node, (Union, Diff)):
        keyword = "UNION" if isinstance(node, Union) else "-"
        text = f"{_emit(node.left, _EXPR)} {keyword} {_emit(node.right, _TERM)}"
        return text if level == _EXPR else f"({text})"
    if isinstance(node, Join):
        text = f"{_emit(node.left, _TERM)} JOIN {_emit(node.right, _FACTOR)}"
        return text if level <= _TERM else f"({text})"
    if isinstance(node, Project):
        return f"PROJECT[{','.join(node.attrs)}] {_emit(node.child, _FACTOR)}"
    if isinstance(node, Select):
        return f"SELECT[{format_predicate(node.predicate)}] {_emit(node.child, _FACTOR)}"
    if isinstance(node, Rename):
        pairs = ",".join(f"{old}->{new}" for old, new in node.mapping)
        return f"RENAME[{pairs}] {_emit(node.child, _FACTOR)}"
    raise TypeError(f"not a query node: {node!r}")
