"""
Error handling for KRel Lab.

Application errors carry a code, a suggestion and structured details. The
handler classifies foreign exceptions, logs them at a level chosen from the
code and formats diagnostics for the terminal.
"""

import os
import sys
import logging
from pathlib import Path
from typing import Dict, List, Any, Optional
from datetime import datetime

from .constants import (
    ERROR_FILE_NOT_FOUND, ERROR_FILE_NOT_FOUND_SUGGESTION,
    ERROR_PERMISSION_DENIED, ERROR_PERMISSION_SUGGESTION,
    ERROR_GENERAL, ERROR_GENERAL_SUGGESTION,
    APP_NAME, LOGGER_NAME,
)


class AppError(Exception):
    """Base exception class for application-specific errors."""

    def __init__(self, message: str, error_code: str = "unknown_error",
                 suggestion: str = "", details: Optional[Dict[str, Any]] = None):
        """
        Initialize application error.

        Args:
            message: Error message
            error_code: Error code for categorization
            suggestion: Suggested solution
            details: Additional error details
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.suggestion = suggestion
        self.details = details or {}
        self.timestamp = datetime.now()


class AlgebraError(AppError):
    """An algebraic operation was called outside its preconditions."""
    pass


class InapplicableError(AppError):
    """A required operation (monus, negation, decidable order) is absent."""
    pass


class RegistrationError(AppError):
    """An instance failed the registration gate."""
    pass


class AnnotationParseError(AppError):
    """An annotation literal does not belong to the instance grammar."""
    pass


class SchemaError(AppError):
    """Relation schemas do not fit the operator."""
    pass


class QueryParseError(AppError):
    """Lexical or syntax error in a query expression."""

    def __init__(self, message: str, line: int, column: int, **kwargs):
        super().__init__(message, "query_parse_error", **kwargs)
        self.line = line
        self.column = column


class UnsupportedSemanticsError(AppError):
    """The instance does not support the requested difference semantics."""
    pass


class ConfigurationError(AppError):
    """Error related to configuration issues."""
    pass


class BoundExceededError(AppError):
    """A finite search was asked for a carrier order above its bound."""
    pass


class InputFileError(AppError):
    """A relation file is missing, unreadable or malformed."""
    pass


class ErrorHandler:
    """Classifies, logs and formats errors for the command line."""

    # codes that describe user input problems rather than faults
    USER_ERROR_CODES = {
        "file_not_found", "permission_denied", "query_parse_error", "schema_error",
        "annotation_parse_error", "unknown_instance", "empty_variables",
        "invalid_selector", "bound_exceeded", "unsupported_semantics",
        "configuration_error", "relation_file_error", "missing_bound",
    }

    def __init__(self):
        """Initialize the error handler."""
        self.logger = logging.getLogger(LOGGER_NAME)
        self.error_history: List[AppError] = []

    def handle_error(self, error: Exception, context: str = "",
                     log_error: bool = True) -> AppError:
        """
        Handle an error: classify it, record it and log it.

        Args:
            error: The exception that occurred
            context: Context where the error occurred
            log_error: Whether to log the error

        Returns:
            Formatted AppError instance
        """
        if isinstance(error, AppError):
            app_error = error
        else:
            app_error = self._classify_error(error, context)

        self.error_history.append(app_error)

        if log_error:
            self._log_error(app_error, context)

        return app_error

    def _classify_error(self, error: Exception, context: str) -> AppError:
        """
        Classify a generic exception into an appropriate AppError type.

        Args:
            error: The original exception
            context: Context where the error occurred

        Returns:
            Classified AppError instance
        """
        error_message = str(error)
        filename = getattr(error, "filename", None) or "file"

        if isinstance(error, FileNotFoundError):
            return InputFileError(
                ERROR_FILE_NOT_FOUND.format(filename=filename),
                "file_not_found",
                ERROR_FILE_NOT_FOUND_SUGGESTION,
                {"context": context} if context else None,
            )

        if isinstance(error, PermissionError):
            return InputFileError(
                ERROR_PERMISSION_DENIED.format(filename=filename),
                "permission_denied",
                ERROR_PERMISSION_SUGGESTION,
            )

        if isinstance(error, (ValueError, TypeError, KeyError)):
            return AppError(
                f"{type(error).__name__}: {error_message}",
                "value_error",
                ERROR_GENERAL_SUGGESTION,
                {"context": context} if context else None,
            )

        return AppError(
            ERROR_GENERAL.format(error_message),
            "unknown_error",
            ERROR_GENERAL_SUGGESTION,
        )

    def _log_error(self, error: AppError, context: str):
        """Log an error with appropriate level and details."""
        log_message = f"{context}: {error.message}" if context else error.message

        if error.error_code in self.USER_ERROR_CODES:
            self.logger.warning(log_message)
        else:
            self.logger.error(log_message, exc_info=True)

        if error.details:
            self.logger.debug(f"Error details: {error.details}")

        if error.suggestion:
            self.logger.info(f"Suggestion: {error.suggestion}")

    def format_error_message(self, error: AppError) -> str:
        """Format an error for terminal display."""
        message_parts = [f"error: {error.message}"]

        if error.suggestion:
            message_parts.append(f"hint: {error.suggestion}")

        for key, value in error.details.items():
            message_parts.append(f"  {key}: {value}")

        return "\n".join(message_parts)

    def create_error_report(self, include_history: bool = True) -> str:
        """
        Create a report of the errors seen in this process.

        Args:
            include_history: Whether to include error history

        Returns:
            Formatted error report
        """
        report_lines = [
            f"{APP_NAME} Error Report",
            "=" * 40,
            f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}",
            f"Python version: {sys.version}",
            f"Platform: {sys.platform}",
            "",
        ]

        stats = self.get_error_statistics()
        if stats:
            report_lines.extend(["Error Counts:", "-" * 20])
            report_lines.extend(f"   {code}: {count}" for code, count in sorted(stats.items()))
            report_lines.append("")

        if include_history and self.error_history:
            report_lines.extend(["Recent Errors:", "-" * 20])
            for i, error in enumerate(self.error_history[-10:], 1):
                report_lines.extend([
                    f"{i}. {error.timestamp.strftime('%Y-%m-%d %H:%M:%S')}",
                    f"   Code: {error.error_code}",
                    f"   Message: {error.message}",
                    f"   Suggestion: {error.suggestion}",
                    "",
                ])

        return "\n".join(report_lines)

    def clear_error_history(self):
        """Clear the error history."""
        self.error_history.clear()

    def get_error_statistics(self) -> Dict[str, int]:
        """Get statistics about errors that have occurred."""
        stats: Dict[str, int] = {}
        for error in self.error_history:
            stats[error.error_code] = stats.get(error.error_code, 0) + 1
        return stats

    def validate_file_operation(self, file_path: str, operation: str = "read") -> Optional[AppError]:
        """
        Validate a file operation before attempting it.

        Args:
            file_path: Path to the file
            operation: Type of operation ("read", "write")

        Returns:
            AppError if validation fails, None if successful
        """
        path = Path(file_path)

        if operation == "read":
            if not path.is_file():
                return InputFileError(
                    ERROR_FILE_NOT_FOUND.format(filename=path.name),
                    "file_not_found",
                    ERROR_FILE_NOT_FOUND_SUGGESTION,
                    {"file_path": str(path)},
                )
            if not os.access(path, os.R_OK):
                return InputFileError(
                    ERROR_PERMISSION_DENIED.format(filename=path.name),
                    "permission_denied",
                    ERROR_PERMISSION_SUGGESTION,
                    {"file_path": str(path)},
                )

        if operation == "write":
            parent = path.parent if str(path.parent) else Path(".")
            if parent.exists() and not os.access(parent, os.W_OK):
                return InputFileError(
                    ERROR_PERMISSION_DENIED.format(filename=str(parent)),
                    "permission_denied",
                    ERROR_PERMISSION_SUGGESTION,
                    {"file_path": str(parent)},
                )

        return None


# Global error handler instance
_error_handler_instance: Optional[ErrorHandler] = None


def get_error_handler() -> ErrorHandler:
    """Get the global error handler instance."""
    global _error_handler_instance
    if _error_handler_instance is None:
        _error_handler_instance = ErrorHandler()
    return _error_handler_instance


def handle_error(error: Exception, context: str = "", **kwargs) -> AppError:
    """Convenience function to handle an error."""
    return get_error_handler().handle_error(error, context, **kwargs)


def validate_file_operation(file_path: str, operation: str = "read") -> Optional[AppError]:
    """Convenience function to validate file operations."""
    return get_error_handler().validate_file_operation(file_path, operation)
