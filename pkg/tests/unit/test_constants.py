"""
Unit tests for the constants module.
"""

from pathlib import Path

from app.utils.constants import (
    APP_NAME, APP_VERSION, LOGGER_NAME,
    DEFAULT_CONFIG_FILENAME, DEFAULT_CONFIG_PATH, DEFAULT_SEED,
    DEFAULT_AXIOM_TRIALS, DEFAULT_IDENTITY_TRIALS, DEFAULT_VARIABLES,
    OUTPUT_FORMATS, LOG_OUTPUT_CHOICES, REPORT_FIELD_ORDER,
    EXIT_OK, EXIT_DIAGNOSTIC, EXIT_UNEXPECTED_VERDICT,
    ENUMERATION_MIN_ORDER, ENUMERATION_MAX_ORDER, ENUMERATION_FLAGGED_ORDER,
    MONUS_UNIQUENESS_MAX_ORDER, MONUS_UNIQUENESS_FLAGGED_ORDER,
    ERROR_QUERY_PARSE, ERROR_UNKNOWN_INSTANCE, ANNOTATION_COLUMN,
)


class TestApplicationConstants:
    """Test application-level constants."""

    def test_app_constants(self):
        assert APP_NAME == "KRel Lab"
        assert isinstance(APP_VERSION, str)
        assert LOGGER_NAME

    def test_config_path_points_into_config_dir(self):
        assert isinstance(DEFAULT_CONFIG_PATH, Path)
        assert DEFAULT_CONFIG_PATH.name == DEFAULT_CONFIG_FILENAME
        assert DEFAULT_CONFIG_PATH.parent.name == "config"


class TestLabDefaults:
    """Published defaults the reproductions depend on."""

    def test_seed_and_trials(self):
        assert DEFAULT_SEED == 20110613
        assert DEFAULT_AXIOM_TRIALS == 10_000
        assert DEFAULT_IDENTITY_TRIALS == 1_000
        assert DEFAULT_VARIABLES == ["x", "y", "z"]

    def test_exit_codes_are_distinct(self):
        assert (EXIT_OK, EXIT_DIAGNOSTIC, EXIT_UNEXPECTED_VERDICT) == (0, 1, 2)

    def test_search_bounds(self):
        assert ENUMERATION_MIN_ORDER == 2
        assert ENUMERATION_MAX_ORDER == 3 < ENUMERATION_FLAGGED_ORDER == 4
        assert MONUS_UNIQUENESS_MAX_ORDER == 3 < MONUS_UNIQUENESS_FLAGGED_ORDER == 4

    def test_choices(self):
        assert OUTPUT_FORMATS == ("text", "csv", "records")
        assert "none" in LOG_OUTPUT_CHOICES
        assert ANNOTATION_COLUMN == "@k"

    def test_report_field_order(self):
        assert REPORT_FIELD_ORDER[0] == "subject"
        assert len(set(REPORT_FIELD_ORDER)) == len(REPORT_FIELD_ORDER)


class TestMessageTemplates:
    def test_query_parse_template(self):
        assert ERROR_QUERY_PARSE.format(line=1, column=4, reason="x") == "Syntax error at 1:4: x"

    def test_unknown_instance_template(self):
        assert "foo" in ERROR_UNKNOWN_INSTANCE.format(name="foo")
