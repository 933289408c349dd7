"""
Tests for the Error Handler System

This module contains tests for the error handling functionality.
"""

import unittest
from unittest.mock import Mock, patch
import shutil
import tempfile
from pathlib import Path

from app.utils.error_handler import (
    ErrorHandler, AppError, AlgebraError, BoundExceededError, ConfigurationError,
    InapplicableError, InputFileError, QueryParseError, RegistrationError, SchemaError,
    UnsupportedSemanticsError, get_error_handler, handle_error, validate_file_operation,
)


class TestAppErrors(unittest.TestCase):
    """Test cases for custom error classes."""

    def test_app_error_creation(self):
        """Test creating an AppError."""
        error = AppError("Test error", "test_code", "Test suggestion")

        self.assertEqual(error.message, "Test error")
        self.assertEqual(error.error_code, "test_code")
        self.assertEqual(error.suggestion, "Test suggestion")
        self.assertEqual(error.details, {})
        self.assertIsNotNone(error.timestamp)

    def test_error_hierarchy(self):
        """Every lab error is an AppError."""
        for cls in (AlgebraError, InapplicableError, RegistrationError, SchemaError,
                    UnsupportedSemanticsError, ConfigurationError, BoundExceededError, InputFileError):
            error = cls("message", "code")
            self.assertIsInstance(error, AppError)
            self.assertEqual(error.error_code, "code")

    def test_query_parse_error_position(self):
        """QueryParseError carries its position and a fixed code."""
        error = QueryParseError("Syntax error at 2:5: boom", 2, 5, suggestion="hint")

        self.assertEqual((error.line, error.column), (2, 5))
        self.assertEqual(error.error_code, "query_parse_error")
        self.assertEqual(error.suggestion, "hint")


class TestErrorHandler(unittest.TestCase):
    """Test cases for the ErrorHandler class."""

    def setUp(self):
        """Set up test fixtures."""
        self.handler = ErrorHandler()

    def test_handle_file_not_found(self):
        """Test handling a missing file."""
        error = FileNotFoundError(2, "No such file", "R.csv")

        app_error = self.handler.handle_error(error, "test_operation")

        self.assertIsInstance(app_error, InputFileError)
        self.assertEqual(app_error.error_code, "file_not_found")
        self.assertIn("R.csv", app_error.message)

    def test_handle_permission_error(self):
        """Test handling a permission error."""
        error = PermissionError("Permission denied")

        app_error = self.handler.handle_error(error, "test_operation")

        self.assertEqual(app_error.error_code, "permission_denied")
        self.assertIn("permission denied", app_error.message.lower())

    def test_handle_value_error(self):
        """Value, type and key errors are grouped together."""
        for error in (ValueError("bad"), TypeError("worse"), KeyError("key")):
            app_error = self.handler.handle_error(error, "ctx")
            self.assertEqual(app_error.error_code, "value_error")
            self.assertEqual(app_error.details, {"context": "ctx"})

    def test_handle_unknown_error(self):
        app_error = self.handler.handle_error(RuntimeError("boom"), log_error=False)

        self.assertEqual(app_error.error_code, "unknown_error")
        self.assertIn("boom", app_error.message)

    def test_handle_app_error_directly(self):
        """Test handling an AppError directly."""
        original_error = SchemaError("Schema error in R: bad", "schema_error", "Check it")

        app_error = self.handler.handle_error(original_error, "test_operation")

        self.assertIs(app_error, original_error)

    def test_user_errors_log_as_warning(self):
        with patch.object(self.handler.logger, "warning") as warning, \
                patch.object(self.handler.logger, "error") as error:
            self.handler.handle_error(ConfigurationError("bad value", "configuration_error"))
        warning.assert_called_once()
        error.assert_not_called()

    def test_faults_log_as_error(self):
        with patch.object(self.handler.logger, "error") as error:
            self.handler.handle_error(AlgebraError("broken", "algebra_error"))
        error.assert_called_once()

    def test_error_history_and_statistics(self):
        """Test that errors are tracked in history."""
        for i in range(3):
            self.handler.handle_error(FileNotFoundError(f"File {i} not found"), log_error=False)
        self.handler.handle_error(PermissionError("Permission denied"), log_error=False)

        stats = self.handler.get_error_statistics()

        self.assertEqual(len(self.handler.error_history), 4)
        self.assertEqual(stats.get("file_not_found", 0), 3)
        self.assertEqual(stats.get("permission_denied", 0), 1)

    def test_clear_error_history(self):
        """Test clearing error history."""
        self.handler.handle_error(ValueError("x"), log_error=False)
        self.handler.clear_error_history()

        self.assertEqual(len(self.handler.error_history), 0)

    def test_create_error_report(self):
        """Test creating error report."""
        self.handler.handle_error(FileNotFoundError("Test file not found"), log_error=False)

        report = self.handler.create_error_report()

        self.assertIn("KRel Lab Error Report", report)
        self.assertIn("Recent Errors:", report)
        self.assertIn("file_not_found", report)
        self.assertIn("Error Counts:", report)
        self.assertIn("file_not_found: 1", report)

    def test_format_error_message(self):
        """Test formatting error message."""
        error = AppError("Test error", "test_error", "Test suggestion", {"detail": "value"})

        message = self.handler.format_error_message(error)

        self.assertEqual(message, "error: Test error\nhint: Test suggestion\n  detail: value")

    def test_format_error_message_without_suggestion(self):
        message = self.handler.format_error_message(AppError("Plain", "x"))

        self.assertEqual(message, "error: Plain")


class TestErrorHandlerValidation(unittest.TestCase):
    """Test cases for error handler validation functions."""

    def setUp(self):
        """Set up test fixtures."""
        self.handler = ErrorHandler()
        self.test_dir = Path(tempfile.mkdtemp())
        self.test_file = self.test_dir / "R.csv"
        self.test_file.write_text("a\n1\n")

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def test_validate_file_operation_read_valid(self):
        self.assertIsNone(self.handler.validate_file_operation(str(self.test_file), "read"))

    def test_validate_file_operation_read_nonexistent(self):
        error = self.handler.validate_file_operation(str(self.test_dir / "missing.csv"), "read")

        self.assertIsInstance(error, InputFileError)
        self.assertEqual(error.error_code, "file_not_found")
        self.assertEqual(error.details["file_path"], str(self.test_dir / "missing.csv"))

    def test_validate_file_operation_read_directory(self):
        error = self.handler.validate_file_operation(str(self.test_dir), "read")

        self.assertEqual(error.error_code, "file_not_found")

    def test_validate_file_operation_write_valid(self):
        self.assertIsNone(self.handler.validate_file_operation(str(self.test_dir / "out.csv"), "write"))

    def test_validate_file_operation_write_no_permission(self):
        with patch("app.utils.error_handler.os.access", return_value=False):
            error = self.handler.validate_file_operation(str(self.test_dir / "out.csv"), "write")

        self.assertEqual(error.error_code, "permission_denied")


class TestErrorHandlerFunctions(unittest.TestCase):
    """Test cases for error handler convenience functions."""

    def test_get_error_handler_singleton(self):
        self.assertIs(get_error_handler(), get_error_handler())

    @patch('app.utils.error_handler.get_error_handler')
    def test_handle_error_function(self, mock_get_handler):
        """Test the handle_error convenience function."""
        mock_handler = Mock()
        mock_handler.handle_error.return_value = "handled"
        mock_get_handler.return_value = mock_handler

        error = FileNotFoundError("Test error")
        result = handle_error(error, "test_context", log_error=False)

        self.assertEqual(result, "handled")
        mock_handler.handle_error.assert_called_once_with(error, "test_context", log_error=False)

    @patch('app.utils.error_handler.get_error_handler')
    def test_validate_file_operation_function(self, mock_get_handler):
        """Test the validate_file_operation convenience function."""
        mock_handler = Mock()
        mock_handler.validate_file_operation.return_value = None
        mock_get_handler.return_value = mock_handler

        result = validate_file_operation("R.csv", "read")

        self.assertIsNone(result)
        mock_handler.validate_file_operation.assert_called_once_with("R.csv", "read")


if __name__ == '__main__':
    unittest.main()
