"""
Integration tests for the configuration file and command-line overrides.
"""

import pytest

from tests.integration.base_integration_test import BaseIntegrationTest


@pytest.mark.integration
class TestConfigIntegration(BaseIntegrationTest):
    """Configuration values reach the commands; flags win over the file."""

    def test_instance_from_file(self):
        self.write_config(default_instance="security")
        assert self.output_lines("check", "--axiom", "A13")[0].startswith("A13 security")

    def test_flag_wins_over_file(self):
        self.write_config(default_instance="security")
        assert self.output_lines("check", "--axiom", "A13", "--instance", "tvl")[0].startswith("A13 tvl")

    def test_trials_from_file(self):
        self.write_config(axiom_trials=7)
        assert "sampled(7," in self.output_lines("check", "--axiom", "A1")[0]

    def test_bound_flag(self):
        line = self.output_lines("check", "--instance", "nat_sat", "--bound", "3", "--axiom", "A1")[0]
        assert line.startswith("A1 nat_sat[3] [exhaustive]")

    def test_format_from_file(self):
        self.write_config(output_format="csv")
        lines = self.output_lines("check", "--axiom", "A1")
        assert lines[0].startswith("subject,instance")

    def test_invalid_file_value(self):
        self.write_config(workers=0)
        code, _, err = self.run_cli("check", "--axiom", "A1")
        assert code == 1
        assert "workers" in err

    def test_unknown_instance_in_file(self):
        self.write_config(default_instance="quaternion")
        code, _, err = self.run_cli("check", "--axiom", "A1")
        assert code == 1
        assert "quaternion" in err

    def test_missing_config_uses_defaults(self):
        self.config_path.unlink()
        manager = self.create_test_config_manager()
        assert manager.get("axiom_trials") == 10_000

    def test_file_logging(self):
        log_path = self.temp_dir / "lab.log"
        self.write_config(log_output="file", log_file_path=str(log_path))
        self.output_lines("check", "--axiom", "A13", "--instance", "security", "--log-level", "INFO")
        assert "A13" in log_path.read_text(encoding="utf-8")
        self.write_config()
        self.output_lines("check", "--axiom", "A1")
