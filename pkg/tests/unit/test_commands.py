"""
Unit tests for argument parsing and check selection.
"""

import json

import pytest

from app.cli.commands import build_parser, describe_instance, format_relation, selection_from_args
from app.core.equations import AxiomId
from app.core.krel import KRelation
from app.instances.registry import make_instance
from app.lab.identities import IdentityId
from app.utils.error_handler import AppError


def parse(*argv):
    return build_parser().parse_args(list(argv))


class TestParser:
    def test_eval(self):
        args = parse("eval", "R - S", "R.csv", "S.csv", "--instance", "security")
        assert (args.query, args.csv, args.instance) == ("R - S", ["R.csv", "S.csv"], "security")

    def test_unset_flags_are_none(self):
        args = parse("check", "--axiom", "A1")
        assert args.seed is None
        assert args.allow_order4 is None
        assert args.format is None

    def test_log_level_is_upper_cased(self):
        assert parse("table3", "--log-level", "debug").log_level == "DEBUG"

    def test_usage_error_exits_with_diagnostic_code(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            parse("check", "--instance", "quaternion")
        assert excinfo.value.code == 1

    def test_enumerate(self):
        args = parse("enumerate", "3", "--labels", "2,0,1", "--dump")
        assert (args.order, args.labels, args.dump) == (3, "2,0,1", True)


class TestSelection:
    def test_axioms_deduplicated_in_order(self):
        selection = selection_from_args(parse("check", "--axiom", "A13,a11", "--axiom", "A13"))
        assert selection.axioms == (AxiomId.A13, AxiomId.A11)

    def test_all(self):
        selection = selection_from_args(parse("check", "--all-axioms", "--all-identities", "--galois"))
        assert len(selection.axioms) == 13
        assert selection.identities == tuple(IdentityId)
        assert selection.galois

    def test_empty_selection(self):
        with pytest.raises(AppError) as excinfo:
            selection_from_args(parse("check"))
        assert excinfo.value.error_code == "invalid_selector"

    def test_unknown_selector(self):
        with pytest.raises(AppError) as excinfo:
            selection_from_args(parse("check", "--identity", "I99"))
        assert "I99" in excinfo.value.message

    def test_embedded_applies_to_axioms_only(self):
        with pytest.raises(AppError):
            selection_from_args(parse("check", "--embedded", "--axiom", "A13", "--galois"))
        assert selection_from_args(parse("check", "--embedded", "--axiom", "A13")).embedded


class TestFormatRelation:
    def test_formats(self, nat):
        relation = KRelation(nat, ("a",), [((1,), 2)])
        assert format_relation(relation, "text") == ["a=1 : 2"]
        assert format_relation(relation, "csv") == ["a,@k", "1,2"]
        assert json.loads(format_relation(relation, "records")[0]) == {"a": 1, "@k": "2"}


class TestDescribeInstance:
    def test_posbool(self):
        info = describe_instance(make_instance("posbool", ("x", "y", "z")))
        assert info["instance"] == "posbool[x,y,z]"
        assert info["carrier"] == "finite(20)"
        assert info["difference"] == "monus"
        assert info["lattice"] and info["variables"]

    def test_ring_and_countable(self):
        info = describe_instance(make_instance("int"))
        assert (info["carrier"], info["difference"], info["variables"]) == ("countable", "ring", False)
