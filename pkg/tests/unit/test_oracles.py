"""
Unit tests for the naive reference evaluators.
"""

from collections import Counter

import pytest

from app.cli.query_parser import parse_query
from app.core.algebra import VerdictKind
from app.lab.oracles import QUERY_POOL, naive_bag_eval, naive_set_eval, run_oracle_equivalence
from app.utils.error_handler import ConfigurationError


def t(**values):
    return frozenset(values.items())


class TestNaiveEvaluators:
    def test_bag_difference_truncates(self):
        db = {"R": Counter({t(a=1): 2, t(a=2): 1}), "S": Counter({t(a=1): 3})}
        assert naive_bag_eval(db, parse_query("R - S")) == Counter({t(a=2): 1})

    def test_bag_join_multiplies(self):
        db = {"R": Counter({t(a=1, b=2): 2}), "T": Counter({t(b=2, c=5): 3})}
        assert naive_bag_eval(db, parse_query("R JOIN T")) == Counter({t(a=1, b=2, c=5): 6})

    def test_set_projection(self):
        db = {"R": {t(a=1, b=2), t(a=1, b=3)}}
        assert naive_set_eval(db, parse_query("PROJECT[a] R")) == {t(a=1)}


class TestOracleEquivalence:
    @pytest.mark.parametrize("name", ["nat", "bool"])
    def test_agrees(self, name):
        report = run_oracle_equivalence(name, cases=10, seed=5)
        assert report.agrees
        check = report.to_check_report()
        assert check.verdict is VerdictKind.HOLDS_SAMPLED
        assert check.trials == 10 * len(QUERY_POOL)

    def test_unknown_instance(self):
        with pytest.raises(ConfigurationError):
            run_oracle_equivalence("int", cases=1)
