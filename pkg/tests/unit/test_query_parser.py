"""
Unit tests for the query parser, the schema checker and the printer.
"""

import pytest

from app.cli.query_parser import parse_query, tokenize
from app.core.query import (
    AttrEq, Base, ConstEq, Diff, Join, Predicate, Project, Rename, Select, Union,
    base_names, infer_schema, to_text,
)
from app.utils.error_handler import QueryParseError, SchemaError


class TestParsing:
    """Precedence, associativity and the bracketed operators."""

    def test_join_binds_tighter_than_difference(self):
        assert parse_query("R - S JOIN T") == Diff(Base("R"), Join(Base("S"), Base("T")))

    def test_parenthesized_difference(self):
        assert parse_query("R JOIN (S - T)") == Join(Base("R"), Diff(Base("S"), Base("T")))

    def test_difference_is_left_associative(self):
        assert parse_query("R - S - T") == Diff(Diff(Base("R"), Base("S")), Base("T"))

    def test_union_and_difference_share_precedence(self):
        assert parse_query("R UNION S - T") == Diff(Union(Base("R"), Base("S")), Base("T"))

    def test_prefix_operators_take_a_factor(self):
        tree = parse_query("PROJECT[a] SELECT[a=1] R")
        assert tree == Project(("a",), Select(Predicate((ConstEq("a", 1),)), Base("R")))

    def test_select_atoms(self):
        tree = parse_query("SELECT[a=b, c='x y', d=-2] R")
        assert tree.predicate.atoms == (AttrEq("a", "b"), ConstEq("c", "x y"), ConstEq("d", -2))

    def test_rename(self):
        assert parse_query("RENAME[a->b, c->d] R") == Rename((("a", "b"), ("c", "d")), Base("R"))

    def test_keywords_are_case_sensitive(self):
        assert parse_query("union") == Base("union")

    def test_multiline_query(self):
        assert parse_query("R\nUNION\nS") == Union(Base("R"), Base("S"))


class TestParseErrors:
    """Errors carry line and column of the offending token."""

    def test_missing_operand(self):
        with pytest.raises(QueryParseError) as excinfo:
            parse_query("R UNION")
        assert (excinfo.value.line, excinfo.value.column) == (1, 8)
        assert excinfo.value.message.startswith("Syntax error at 1:8:")

    def test_unclosed_parenthesis(self):
        with pytest.raises(QueryParseError) as excinfo:
            parse_query("(R - S")
        assert "')'" in excinfo.value.message

    def test_error_on_second_line(self):
        with pytest.raises(QueryParseError) as excinfo:
            parse_query("R\n  JOIN ]")
        assert (excinfo.value.line, excinfo.value.column) == (2, 8)

    def test_unexpected_character(self):
        with pytest.raises(QueryParseError) as excinfo:
            tokenize("R * S")
        assert excinfo.value.column == 3
        assert excinfo.value.error_code == "query_parse_error"

    def test_trailing_tokens(self):
        with pytest.raises(QueryParseError):
            parse_query("R S")


class TestSchemaInference:
    """Result schemas and schema errors."""

    SCHEMAS = {"R": ("a", "b"), "S": ("b", "c"), "T": ("b", "a")}

    def test_join_schema(self):
        assert infer_schema(parse_query("R JOIN S"), self.SCHEMAS) == ("a", "b", "c")

    def test_union_accepts_permuted_schema(self):
        assert infer_schema(parse_query("R UNION T"), self.SCHEMAS) == ("a", "b")

    def test_union_schema_mismatch_names_subexpression(self):
        with pytest.raises(SchemaError) as excinfo:
            infer_schema(parse_query("R UNION S"), self.SCHEMAS)
        assert excinfo.value.details["node"] == "R UNION S"

    def test_parse_query_checks_schemas(self):
        with pytest.raises(SchemaError):
            parse_query("PROJECT[z] R", self.SCHEMAS)

    def test_rename_collision(self):
        with pytest.raises(SchemaError):
            infer_schema(parse_query("RENAME[a->b] R"), self.SCHEMAS)

    def test_select_constant_kind(self):
        kinds = {"R": {"a": int, "b": str}}
        query = parse_query("SELECT[a=1, b='x'] R")
        assert infer_schema(query, self.SCHEMAS, kinds) == ("a", "b")
        with pytest.raises(SchemaError):
            infer_schema(parse_query("SELECT[b=1] R"), self.SCHEMAS, kinds)
        with pytest.raises(SchemaError):
            infer_schema(parse_query("SELECT[b='x'] R"), self.SCHEMAS)
        with pytest.raises(SchemaError):
            parse_query("SELECT[a=b] R", self.SCHEMAS, kinds)

    def test_join_kind_conflict(self):
        kinds = {"R": {"b": int}, "S": {"b": str}}
        with pytest.raises(SchemaError) as excinfo:
            infer_schema(parse_query("R JOIN S"), self.SCHEMAS, kinds)
        assert excinfo.value.details["node"] == "R JOIN S"
        assert infer_schema(parse_query("RENAME[b->d] R JOIN S"), self.SCHEMAS, kinds) == ("a", "d", "b", "c")

    def test_base_names(self):
        assert base_names(parse_query("R JOIN S - R")) == ("R", "S")


class TestPrinting:
    """The printer parenthesizes only where needed."""

    @pytest.mark.parametrize("text", [
        "R - S - T",
        "R - (S - T)",
        "R JOIN (S UNION T)",
        "R JOIN S UNION T",
        "PROJECT[a,b] (R JOIN S)",
        "SELECT[a=1,b='x'] RENAME[c->d] R",
        "R JOIN (S JOIN T)",
    ])
    def test_round_trip(self, text):
        assert to_text(parse_query(text)) == text

    def test_redundant_parentheses_dropped(self):
        assert to_text(parse_query("(R JOIN S) - T")) == "R JOIN S - T"
