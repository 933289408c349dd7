"""
Boolean formula literals shared by PosBool[X] and Bool[X].

Grammar (loosest first): `or := and ('|' and)*`, `and := unary ('&' unary)*`,
`unary := '!' unary | atom`, `atom := VAR | '0' | '1' | '(' or ')'`.
"""

import re
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, List, Sequence, Tuple, Union

from .literals import annotation_error

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([01])|([|&!()]))")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Const, Not, And, Or]


def _tokenize(text: str, instance: str) -> List[str]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if not match:
            raise annotation_error(text, instance, f"unexpected character at offset {position}")
        tokens.append(match.group(match.lastindex))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, instance: str, variables: Sequence[str], allow_negation: bool):
        self.text = text
        self.instance = instance
        self.variables = set(variables)
        self.allow_negation = allow_negation
        self.tokens = _tokenize(text, instance)
        self.position = 0

    def peek(self) -> str:
        return self.tokens[self.position] if self.position < len(self.tokens) else ""

    def take(self) -> str:
        token = self.peek()
        self.position += 1
        return token

    def fail(self, reason: str):
        return annotation_error(self.text, self.instance, reason)

    def parse(self) -> Formula:
        if not self.tokens:
            raise self.fail("empty formula")
        node = self.parse_or()
        if self.position != len(self.tokens):
            raise self.fail(f"unexpected '{self.peek()}'")
        return node

    def parse_or(self) -> Formula:
        node = self.parse_and()
        while self.peek() == "|":
            self.take()
            node = Or(node, self.parse_and())
        return node

    def parse_and(self) -> Formula:
        node = self.parse_unary()
        while self.peek() == "&":
            self.take()
            node = And(node, self.parse_unary())
        return node

    def parse_unary(self) -> Formula:
        if self.peek() == "!":
            if not self.allow_negation:
                raise self.fail("negation is not allowed in positive formulas")
            self.take()
            return Not(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        token = self.take()
        if token == "(":
            node = self.parse_or()
            if self.take() != ")":
                raise self.fail("missing ')'")
            return node
        if token in ("0", "1"):
            return Const(token == "1")
        if token and (token[0].isalpha() or token[0] == "_"):
            if token not in self.variables:
                raise self.fail(f"variable '{token}' is not declared")
            return Var(token)
        raise self.fail(f"unexpected '{token or 'end of input'}'")


def parse_formula(text: str, instance: str, variables: Sequence[str],
                  allow_negation: bool = True) -> Formula:
    return _Parser(text, instance, variables, allow_negation).parse()


def evaluate(node: Formula, true_vars: Callable[[str], bool]) -> bool:
    if isinstance(node, Var):
        return true_vars(node.name)
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Not):
        return not evaluate(node.operand, true_vars)
    if isinstance(node, And):
        return evaluate(node.left, true_vars) and evaluate(node.right, true_vars)
    return evaluate(node.left, true_vars) or evaluate(node.right, true_vars)


Clauses = FrozenSet[FrozenSet[str]]


def minimize_clauses(clauses: Iterable[FrozenSet[str]]) -> Clauses:
    """Absorption: drops every clause that strictly contains another."""
    unique = set(clauses)
    return frozenset(c for c in unique if not any(other < c for other in unique))


def monotone_clauses(node: Formula) -> Clauses:
    """DNF of a negation-free formula, reduced to an antichain."""
    if isinstance(node, Var):
        return frozenset({frozenset({node.name})})
    if isinstance(node, Const):
        return frozenset({frozenset()}) if node.value else frozenset()
    if isinstance(node, Or):
        return minimize_clauses(monotone_clauses(node.left) | monotone_clauses(node.right))
    if isinstance(node, And):
        left, right = monotone_clauses(node.left), monotone_clauses(node.right)
        return minimize_clauses(l | r for l in left for r in right)
    raise TypeError(f"negation has no monotone clause form: {node!r}")


def assignments(variables: Sequence[str]) -> Iterable[Tuple[int, Callable[[str], bool]]]:
    """(bitmask, lookup) for every assignment; bit i is variables[i]."""
    positions = {v: i for i, v in enumerate(variables)}
    for mask in range(1 << len(variables)):
        yield mask, (lambda name, mask=mask: bool(mask >> positions[name] & 1))
