"""
Error handling utilities for better user feedback and debugging.

Every failure the library can raise is an ``AppError`` with a category, so the
CLI can turn it into a one-line message, a suggestion and an exit code.
"""

from typing import Dict, Any, Optional, Tuple
import traceback
import logging

logger = logging.getLogger(__name__)


class ErrorCategory:
    """Error categories for better error handling."""
    USER_ERROR = "user_error"  # User can fix (invalid input, bad polygon data)
    SYSTEM_ERROR = "system_error"  # Environment issue (IO, configuration)
    CRITICAL_ERROR = "critical_error"  # A proven identity failed (needs investigation)


# Exit codes of the command-line interface
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class AppError(Exception):
    """Custom application error with category and user-friendly message."""

    def __init__(
        self,
        message: str,
        category: str = ErrorCategory.USER_ERROR,
        details: Optional[str] = None,
        suggestion: Optional[str] = None,
        status_code: Optional[int] = None
    ):
        self.message = message
        self.category = category
        self.details = details
        self.suggestion = suggestion
        if status_code is None:
            status_code = EXIT_CHECK_FAILED if category == ErrorCategory.CRITICAL_ERROR else EXIT_INPUT_ERROR
        self.status_code = status_code
        super().__init__(self.message)


class ConfigError(AppError):
    """Invalid environment configuration."""

    def __init__(self, message: str):
        super().__init__(
            message,
            category=ErrorCategory.SYSTEM_ERROR,
            suggestion="Check the FRIEZE_* variables in your environment or .env file.",
            status_code=EXIT_INPUT_ERROR
        )


class InputFormatError(AppError):
    """A polygon or frieze file does not follow the documented JSON layout."""

    def __init__(self, message: str, details: Optional[str] = None):
        super().__init__(
            message,
            details=details,
            suggestion="See README.md for the PolygonSpec and frieze file formats."
        )


# --- scalar -------------------------------------------------------------------

class DivisionByZero(AppError, ZeroDivisionError):
    """Division by the zero element of a field."""

    def __init__(self, message: str = "division by zero"):
        super().__init__(message)


class VariantMismatch(AppError):
    """Scalars from different fields (or indeterminate universes) were combined."""

    def __init__(self, left: str, right: str):
        super().__init__(
            f"cannot combine {left} with {right}",
            suggestion="Use one scalar_mode and one variable list per computation."
        )


class ParseError(AppError):
    """Scalar text does not match the scalar grammar."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(
            f"{message} at position {position}",
            details=f"{text}\n{' ' * position}^",
            suggestion="Scalars look like -3/4, 2*a^2*b - 1/2 or (a+b)/(c)."
        )


# --- geometry -----------------------------------------------------------------

class InvalidVertex(AppError):
    """A vertex label outside 1..n, or a degenerate diagonal."""

    def __init__(self, message: str):
        super().__init__(message, suggestion="Vertices are labeled 1..n in cyclic order.")


class NotInternal(AppError):
    """A dissection contains a boundary edge."""

    def __init__(self, diagonal: Tuple[int, int]):
        self.diagonal = diagonal
        super().__init__(
            f"diagonal {diagonal[0]},{diagonal[1]} is a boundary edge, not an internal diagonal"
        )


class Crossing(AppError):
    """Two diagonals of a dissection cross."""

    def __init__(self, first: Tuple[int, int], second: Tuple[int, int]):
        self.first = first
        self.second = second
        super().__init__(
            f"diagonals {first[0]},{first[1]} and {second[0]},{second[1]} cross",
            suggestion="A dissection must consist of pairwise non-crossing diagonals."
        )


class InvalidCell(AppError):
    """A cell is not a cyclically ordered vertex subset of the polygon."""


# --- frieze -------------------------------------------------------------------

class ZeroGluingValue(AppError):
    """A gluing diagonal carries the value zero."""

    def __init__(self, diagonal: Tuple[int, int]):
        self.diagonal = diagonal
        super().__init__(
            f"gluing diagonal {diagonal[0]},{diagonal[1]} has value 0",
            suggestion="Gluing diagonals must carry invertible values."
        )


class ValueMismatch(AppError):
    """Two pieces disagree on a shared diagonal."""

    def __init__(self, diagonal: Tuple[int, int], details: Optional[str] = None):
        self.diagonal = diagonal
        super().__init__(
            f"pieces disagree on shared diagonal {diagonal[0]},{diagonal[1]}",
            details=details
        )


class PieceMismatch(AppError):
    """The given pieces are not the cells of the gluing dissection."""


class PreconditionError(AppError):
    """An operation was called outside its documented domain."""


# --- matrix / gallery ---------------------------------------------------------

class TooLarge(AppError):
    """A brute-force routine was asked for an input beyond its guard."""


class SizeMismatch(AppError):
    """Cell sizes do not add up to the polygon size."""


class ClaimViolated(AppError):
    """A zero predicted by the structured row reduction is not zero."""

    def __init__(self, row: int, column: int, value: Any = None):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(
            f"structured reduction left a nonzero entry at ({row},{column})",
            category=ErrorCategory.CRITICAL_ERROR,
            details=None if value is None else f"entry value: {value}",
            suggestion="The input is not a weak frieze with respect to the gluing diagonal."
        )


class DiamondRuleViolated(AppError):
    """A Maldonado matrix fails the generalized diamond rule."""


def create_error_response(
    error: Exception,
    include_traceback: bool = False
) -> Dict[str, Any]:
    """
    Create a standardized error response.

    Args:
        error: The exception that occurred
        include_traceback: Whether to include full traceback (for debugging)

    Returns:
        Dictionary with error details; ``status_code`` is the CLI exit code
    """
    if isinstance(error, AppError):
        response = {
            "error": error.message,
            "category": error.category,
            "status_code": error.status_code
        }
        if error.details:
            response["details"] = error.details
        if error.suggestion:
            response["suggestion"] = error.suggestion
        if include_traceback:
            response["traceback"] = traceback.format_exc()
        return response

    error_type = type(error).__name__
    error_message = str(error)

    # Classify generic errors
    if isinstance(error, (FileNotFoundError, IsADirectoryError, PermissionError)):
        category = ErrorCategory.USER_ERROR
        status_code = EXIT_INPUT_ERROR
        suggestion = "Please check that the file exists and the path is correct."
    elif isinstance(error, (KeyError, ValueError)):
        category = ErrorCategory.USER_ERROR
        status_code = EXIT_INPUT_ERROR
        suggestion = "Please check that all required fields are provided."
    else:
        category = ErrorCategory.CRITICAL_ERROR
        status_code = EXIT_CHECK_FAILED
        suggestion = "An unexpected error occurred. Please report it with the input file."

    logger.debug(f"Classified {error_type} as {category}")

    response = {
        "error": error_message,
        "category": category,
        "error_type": error_type,
        "status_code": status_code,
        "suggestion": suggestion
    }

    if include_traceback:
        response["traceback"] = traceback.format_exc()

    return response
