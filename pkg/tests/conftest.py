"""
Shared pytest configuration for KRel Lab.

Markers are registered here so a bare `pytest` run works without the
options file in config/pytest.ini.
"""

import pytest

from app.instances.registry import make_instance


def pytest_configure(config):
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Slow running tests (full published trial counts)")


@pytest.fixture
def nat():
    return make_instance("nat")


@pytest.fixture
def boolean():
    return make_instance("bool")


@pytest.fixture
def security():
    return make_instance("security")


@pytest.fixture
def integers():
    return make_instance("int")


@pytest.fixture
def lab_config(tmp_path):
    """A small, fast configuration dictionary with the regression store under tmp_path."""
    return {
        "default_instance": "nat",
        "variables": ["x", "y", "z"],
        "diff_semantics": "monus",
        "seed": 20110613,
        "axiom_trials": 200,
        "identity_trials": 50,
        "registration_samples": 100,
        "sample_size": 8,
        "max_tuples": 4,
        "domain_size": 3,
        "schema_width": 2,
        "bounded_nat": 7,
        "bounded_tropical": 7,
        "fuzz_grid": 4,
        "output_format": "text",
        "workers": 1,
        "allow_order4": False,
        "regression_path": str(tmp_path / "regression.json"),
        "log_output": "none",
        "log_level": "WARNING",
        "log_file_path": str(tmp_path / "lab.log"),
    }
