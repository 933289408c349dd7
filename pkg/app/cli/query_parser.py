"""
Query text -> QueryExpr.

    expr   := term (('UNION' | '-') term)*
    term   := factor ('JOIN' factor)*
    factor := NAME | '(' expr ')'
            | 'PROJECT' '[' names ']' factor
            | 'SELECT' '[' atom (',' atom)* ']' factor
            | 'RENAME' '[' NAME '->' NAME (',' NAME '->' NAME)* ']' factor
    atom   := NAME '=' (NAME | INT | '-' INT | STRING)

Binary operators are left-associative; JOIN binds tighter than UNION and '-'.
"""

import re
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence

from ..core.query import (
    AttrEq, Base, ColumnKind, ConstEq, Diff, Join, Predicate, Project, QueryExpr, Rename, Select, Union,
    infer_schema,
)
from ..utils.constants import ERROR_QUERY_PARSE, ERROR_QUERY_PARSE_SUGGESTION
from ..utils.error_handler import QueryParseError

KEYWORDS = {"UNION", "JOIN", "PROJECT", "SELECT", "RENAME"}

_TOKEN_SPEC = [
    ("SPACE", r"[ \t\r]+"),
    ("NEWLINE", r"\n"),
    ("ARROW", r"->"),
    ("INT", r"\d+"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("STRING", r"'[^'\n]*'|\"[^\"\n]*\""),
    ("PUNCT", r"[()\[\],=\-]"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _error(line: int, column: int, reason: str) -> QueryParseError:
    return QueryParseError(
        ERROR_QUERY_PARSE.format(line=line, column=column, reason=reason),
        line, column, suggestion=ERROR_QUERY_PARSE_SUGGESTION,
    )


def tokenize(src: str) -> List[Token]:
    tokens = []
    line, line_start, position = 1, 0, 0
    while position < len(src):
        match = _TOKEN_RE.match(src, position)
        column = position - line_start + 1
        if not match:
            raise _error(line, column, f"unexpected character {src[position]!r}")
        kind, text = match.lastgroup, match.group()
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
        elif kind != "SPACE":
            if kind == "NAME" and text in KEYWORDS:
                kind = "KEYWORD"
            elif kind in ("PUNCT", "ARROW"):
                kind = text
            tokens.append(Token(kind, text, line, column))
        position = match.end()
    tokens.append(Token("EOF", "", line, position - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.current
        return token.kind == kind and (text is None or token.text == text)

    def advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        if not self.at(kind):
            raise self.unexpected(what)
        return self.advance()

    def unexpected(self, expected: str) -> QueryParseError:
        token = self.current
        found = "end of input" if token.kind == "EOF" else repr(token.text)
        return _error(token.line, token.column, f"expected {expected}, found {found}")

    def parse(self) -> QueryExpr:
        node = self.expr()
        if not self.at("EOF"):
            raise self.unexpected("UNION, '-', JOIN or end of input")
        return node

    def expr(self) -> QueryExpr:
        node = self.term()
        while self.at("KEYWORD", "UNION") or self.at("-"):
            operator = self.advance()
            right = self.term()
            node = Union(node, right) if operator.kind == "KEYWORD" else Diff(node, right)
        return node

    def term(self) -> QueryExpr:
        node = self.factor()
        while self.at("KEYWORD", "JOIN"):
            self.advance()
            node = Join(node, self.factor())
        return node

    def factor(self) -> QueryExpr:
        if self.at("NAME"):
            return Base(self.advance().text)
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")", "')'")
            return node
        if self.at("KEYWORD", "PROJECT"):
            self.advance()
            self.expect("[", "'['")
            names = [self.expect("NAME", "an attribute name").text]
            while self.at(","):
                self.advance()
                names.append(self.expect("NAME", "an attribute name").text)
            self.expect("]", "']'")
            return Project(tuple(names), self.factor())
        if self.at("KEYWORD", "SELECT"):
            self.advance()
            self.expect("[", "'['")
            atoms = [self.atom()]
            while self.at(","):
                self.advance()
                atoms.append(self.atom())
            self.expect("]", "']'")
            return Select(Predicate(tuple(atoms)), self.factor())
        if self.at("KEYWORD", "RENAME"):
            self.advance()
            self.expect("[", "'['")
            pairs = [self.rename_pair()]
            while self.at(","):
                self.advance()
                pairs.append(self.rename_pair())
            self.expect("]", "']'")
            return Rename(tuple(pairs), self.factor())
        raise self.unexpected("a relation name, '(', PROJECT, SELECT or RENAME")

    def atom(self):
        attr = self.expect("NAME", "an attribute name").text
        self.expect("=", "'='")
        if self.at("NAME"):
            return AttrEq(attr, self.advance().text)
        if self.at("INT"):
            return ConstEq(attr, int(self.advance().text))
        if self.at("-"):
            self.advance()
            return ConstEq(attr, -int(self.expect("INT", "an integer").text))
        if self.at("STRING"):
            return ConstEq(attr, self.advance().text[1:-1])
        raise self.unexpected("an attribute, integer or quoted string")

    def rename_pair(self):
        old = self.expect("NAME", "an attribute name").text
        self.expect("->", "'->'")
        return old, self.expect("NAME", "an attribute name").text


def parse_query(src: str, schemas: Optional[Mapping[str, Sequence[str]]] = None,
                kinds: Optional[Mapping[str, Mapping[str, ColumnKind]]] = None) -> QueryExpr:
    """
    Parses `src`; when base schemas are given, the tree is schema-checked too.

    Columns missing from `kinds` are taken to hold integers.
    """
    tree = _Parser(src).parse()
    if schemas is not None:
        infer_schema(tree, {name: tuple(schema) for name, schema in schemas.items()}, kinds)
    return tree
