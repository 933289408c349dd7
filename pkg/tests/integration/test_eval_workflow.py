"""
Integration tests for evaluating queries over annotated relation files.
"""

import json

import pytest

from tests.integration.base_integration_test import BaseIntegrationTest
from app.core.relation_io import load_relation_csv
from app.instances.registry import make_instance


@pytest.mark.integration
class TestEvalWorkflow(BaseIntegrationTest):
    """CSV files in, evaluated relation out."""

    def test_bag_self_difference_is_empty(self):
        r = self.create_relation("R", "a,b,@k\n1,x,2\n2,y,3\n")
        code, out, err = self.run_cli("eval", "R - R", str(r))
        assert code == 0, err
        assert out == ""

    def test_security_difference(self):
        r = self.create_relation("R", "a,@k\n0,S\n1,T\n")
        s = self.create_relation("S", "a,@k\n0,T\n1,S\n")
        assert self.output_lines("eval", "R - S", str(r), str(s), "--instance", "security") == ["a=0 : S"]

    def test_ring_difference_on_integers(self):
        r = self.create_relation("R", "a,@k\n1,2\n")
        s = self.create_relation("S", "a,@k\n1,5\n")
        lines = self.output_lines("eval", "R - S", str(r), str(s), "--instance", "int", "--diff", "ring")
        assert lines == ["a=1 : -3"]

    def test_join_and_projection(self):
        r = self.create_relation("R", "a,b,@k\n1,x,2\n1,y,3\n")
        t = self.create_relation("T", "b,c,@k\nx,5,4\ny,5,1\n")
        lines = self.output_lines("eval", "PROJECT[c] (R JOIN T)", str(r), str(t))
        assert lines == ["c=5 : 11"]

    def test_records_and_csv_formats(self):
        r = self.create_relation("R", "a,@k\n1,2\n")
        records = self.output_lines("eval", "R UNION R", str(r), "--format", "records")
        assert json.loads(records[0]) == {"a": 1, "@k": "4"}
        assert self.output_lines("eval", "R", str(r), "--format", "csv") == ["a,@k", "1,2"]

    def test_posbool_annotations(self):
        r = self.create_relation("R", "a,@k\n1,x | y | z\n")
        s = self.create_relation("S", "a,@k\n1,x | y\n")
        lines = self.output_lines("eval", "R - S", str(r), str(s), "--instance", "posbool")
        assert lines == ["a=1 : z"]

    def test_written_relation_reloads(self):
        r = self.create_relation("R", "a,@k\n1,T\n")
        code, out, _ = self.run_cli("eval", "R", str(r), "--instance", "security", "--format", "csv")
        again = self.create_relation("Again", out)
        assert load_relation_csv(str(again), make_instance("security")) == load_relation_csv(
            str(r), make_instance("security"))


@pytest.mark.integration
class TestEvalErrors(BaseIntegrationTest):
    """Diagnostics exit with code 1 and a message on stderr."""

    def test_unsupported_semantics(self):
        r = self.create_relation("R", "a\n1\n")
        code, out, err = self.run_cli("eval", "R - R", str(r), "--diff", "ring")
        assert code == 1
        assert err.startswith("error:")
        assert out == ""

    def test_parse_error_position(self):
        r = self.create_relation("R", "a\n1\n")
        code, _, err = self.run_cli("eval", "R UNION", str(r))
        assert code == 1
        assert "1:8" in err

    def test_missing_file(self):
        code, _, err = self.run_cli("eval", "R", str(self.test_data_dir / "R.csv"))
        assert code == 1
        assert "R.csv" in err

    def test_bad_annotation(self):
        r = self.create_relation("R", "a,@k\n1,-4\n")
        code, _, err = self.run_cli("eval", "R", str(r))
        assert code == 1
        assert "row 2" in err

    def test_schema_mismatch(self):
        r = self.create_relation("R", "a\n1\n")
        s = self.create_relation("S", "b\n1\n")
        code, _, _ = self.run_cli("eval", "R UNION S", str(r), str(s))
        assert code == 1

    def test_string_mismatch_on_empty_relation(self):
        r = self.create_relation("R", "a,@k\n")
        code, out, err = self.run_cli("eval", "SELECT[a='x'] R", str(r))
        assert code == 1
        assert "cannot compare" in err
        assert out == ""

    def test_mixed_column(self):
        r = self.create_relation("R", "a,@k\n1,2\nx,1\n")
        code, _, err = self.run_cli("eval", "R", str(r))
        assert code == 1
        assert "R.csv" in err

    def test_join_kind_mismatch(self):
        r = self.create_relation("R", "a,@k\n1,2\n")
        s = self.create_relation("S", "a,@k\nx,1\n")
        code, _, _ = self.run_cli("eval", "R JOIN S", str(r), str(s))
        assert code == 1


@pytest.mark.integration
class TestEvalOutputs(BaseIntegrationTest):
    """Saving results and settings alongside evaluation."""

    def test_string_selection(self):
        r = self.create_relation("R", "a,b,@k\n1,x,2\n2,y,3\n")
        assert self.output_lines("eval", "PROJECT[a] SELECT[b='y'] R", str(r)) == ["a=2 : 3"]

    def test_save_result(self):
        r = self.create_relation("R", "a,@k\n1,2\n2,3\n")
        target = self.temp_dir / "result.csv"
        self.output_lines("eval", "R UNION R", str(r), "--save", str(target))
        saved = load_relation_csv(str(target), make_instance("nat"))
        assert saved.annotation((1,)) == 4
        assert saved.annotation((2,)) == 6

    def test_save_config(self):
        r = self.create_relation("R", "a,@k\n1,T\n")
        self.output_lines("eval", "R", str(r), "--instance", "security", "--save-config")
        saved = json.loads(self.config_path.read_text(encoding="utf-8"))
        assert saved["default_instance"] == "security"
        assert saved["axiom_trials"] == 200
        assert self.output_lines("eval", "R", str(r)) == ["a=1 : T"]

    def test_without_save_config_file_is_unchanged(self):
        r = self.create_relation("R", "a,@k\n1,T\n")
        before = self.config_path.read_text(encoding="utf-8")
        self.output_lines("eval", "R", str(r), "--instance", "security")
        assert self.config_path.read_text(encoding="utf-8") == before
