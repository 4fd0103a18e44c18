"""
Utility modules shared by the frieze library and its command-line interface.
"""

from .error_handler import (
    AppError,
    ErrorCategory,
    ConfigError,
    InputFormatError,
    DivisionByZero,
    VariantMismatch,
    ParseError,
    InvalidVertex,
    NotInternal,
    Crossing,
    InvalidCell,
    ZeroGluingValue,
    ValueMismatch,
    PieceMismatch,
    PreconditionError,
    TooLarge,
    SizeMismatch,
    ClaimViolated,
    DiamondRuleViolated,
    create_error_response,
    EXIT_OK,
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
)

__all__ = [
    'AppError',
    'ErrorCategory',
    'ConfigError',
    'InputFormatError',
    'DivisionByZero',
    'VariantMismatch',
    'ParseError',
    'InvalidVertex',
    'NotInternal',
    'Crossing',
    'InvalidCell',
    'ZeroGluingValue',
    'ValueMismatch',
    'PieceMismatch',
    'PreconditionError',
    'TooLarge',
    'SizeMismatch',
    'ClaimViolated',
    'DiamondRuleViolated',
    'create_error_response',
    'EXIT_OK',
    'EXIT_CHECK_FAILED',
    'EXIT_INPUT_ERROR',
]
