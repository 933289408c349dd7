"""
End-to-end acceptance runs: the A13 classification, the census and the
identity couplings across the built-in instances.
"""

import json

import pytest

from tests.integration.base_integration_test import BaseIntegrationTest
from app.core.algebra import EXHAUSTIVE
from app.instances.registry import LATTICE_NAMES, make_instance
from app.lab.prop34 import NotFound, find_prop34_witness
from app.lab.suite import check_axiom_identity_coupling

DISAGREEING = ("natpoly", "boolpoly", "why", "trio")


@pytest.mark.integration
class TestTable3Acceptance(BaseIntegrationTest):
    """The classification over every built-in m-semiring."""

    def test_text(self):
        lines = self.output_lines("table3")
        assert lines[0].startswith("|= A13")
        assert lines[-1] == "A13 classification: 10 agree, 4 disagree (natpoly, boolpoly, why, trio)"
        for name in DISAGREEING:
            entry = next(line for line in lines if line.startswith(f"{name}[x,y,z]: "))
            assert "DISAGREE" in entry
            assert "adjudicated:" in entry

    def test_records(self):
        records = [json.loads(line) for line in self.output_lines("table3", "--format", "records")]
        by_instance = {r["instance"]: r for r in records[:-1]}
        assert len(by_instance) == 14
        assert by_instance["security"]["observed"] == "fails"
        assert by_instance["tropical"]["observed"] == "holds"
        assert by_instance["fuzz"]["observed"] == "fails"
        assert not by_instance["trio[x,y,z]"]["agrees"]

    def test_check_flag_matches_the_command(self):
        assert self.output_lines("check", "--table3") == self.output_lines("table3")

    @pytest.mark.slow
    def test_published_trial_counts(self):
        self.write_config(axiom_trials=10_000, identity_trials=1_000, registration_samples=1_000)
        lines = self.output_lines("table3", "--workers", "4")
        assert lines[-1] == "A13 classification: 10 agree, 4 disagree (natpoly, boolpoly, why, trio)"


@pytest.mark.integration
class TestCensusAcceptance(BaseIntegrationTest):
    def test_order_three_is_stable(self):
        first = self.output_lines("enumerate", "3")
        second = self.output_lines("enumerate", "3", "--labels", "2,0,1")
        assert first[:4] == second[:4]
        assert second[-1] == "regression: match"

    @pytest.mark.slow
    def test_order_four(self):
        code, out, err = self.run_cli("enumerate", "4", "--allow-order4")
        assert code == 0, err
        assert out.startswith("order 4: ")


@pytest.mark.integration
class TestLatticeAcceptance:
    """Every lattice instance on which A13 fails has a lattice pair, and none where it holds."""

    @pytest.mark.parametrize("name", LATTICE_NAMES)
    def test_pair_tracks_a13(self, name):
        from app.lab.suite import default_strategy
        from app.core.algebra import check_axiom
        inst = make_instance(name)
        a13 = check_axiom(inst, "A13", default_strategy(inst, 500))
        found = find_prop34_witness(inst, 500)
        assert isinstance(found, NotFound) == a13.holds


@pytest.mark.integration
class TestCouplingAcceptance:
    @pytest.mark.parametrize("name", ["security", "tvl", "posbool"])
    def test_failing_a13_lifts_to_i13(self, name):
        axiom_report, identity_report = check_axiom_identity_coupling(make_instance(name), "A13",
                                                                      strategy=EXHAUSTIVE, trials=1)
        assert axiom_report.fails
        assert identity_report.fails
