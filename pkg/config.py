"""
Runtime Configuration
---------------------
Loads tunables from a .env file or the process environment.
Everything has a sensible default, so no configuration is required.
"""

import os
import sys
import logging
from dataclasses import dataclass
from typing import Optional

from utils.error_handler import ConfigError

# Try to load .env file (optional - will work without it)
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    # python-dotenv not installed - will use environment variables directly
    pass


LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


@dataclass(frozen=True)
class Settings:
    """Tunables for the frieze library and CLI."""
    log_level: str = "WARNING"
    leibniz_max: int = 9  # det_leibniz refuses larger matrices
    exhaustive_max: int = 12  # brute-force Ptolemy oracle guard
    random_low: int = 1  # numerator/denominator range of random values
    random_high: int = 20
    max_reseeds: int = 32
    default_seed: int = 0


def _get_int(key: str, default: int) -> int:
    """Read an integer environment variable, falling back to ``default``."""
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}")


def get_settings() -> Settings:
    """
    Load settings from the environment (FRIEZE_* variables).

    The environment is read on every call so that tests can patch it.

    Returns:
        Settings: validated settings

    Raises:
        ConfigError: If a value is malformed or the random range is empty
    """
    settings = Settings(
        log_level=os.getenv("FRIEZE_LOG_LEVEL", Settings.log_level).upper(),
        leibniz_max=_get_int("FRIEZE_LEIBNIZ_MAX", Settings.leibniz_max),
        exhaustive_max=_get_int("FRIEZE_EXHAUSTIVE_MAX", Settings.exhaustive_max),
        random_low=_get_int("FRIEZE_RANDOM_LOW", Settings.random_low),
        random_high=_get_int("FRIEZE_RANDOM_HIGH", Settings.random_high),
        max_reseeds=_get_int("FRIEZE_MAX_RESEEDS", Settings.max_reseeds),
        default_seed=_get_int("FRIEZE_DEFAULT_SEED", Settings.default_seed),
    )

    if settings.random_low < 1 or settings.random_low > settings.random_high:
        raise ConfigError(
            f"random range [{settings.random_low}, {settings.random_high}] is invalid; "
            f"need 1 <= FRIEZE_RANDOM_LOW <= FRIEZE_RANDOM_HIGH"
        )
    if settings.max_reseeds < 1:
        raise ConfigError("FRIEZE_MAX_RESEEDS must be at least 1")
    if settings.log_level not in LOG_LEVELS:
        raise ConfigError(f"FRIEZE_LOG_LEVEL {settings.log_level!r} is not a logging level")

    return settings


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure root logging for command-line use.

    Logs go to standard error so that standard output stays deterministic.

    Args:
        level: Level name overriding FRIEZE_LOG_LEVEL
    """
    name = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
