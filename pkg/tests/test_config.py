import logging

import pytest

from config import Settings, configure_logging, get_settings
from utils.error_handler import ConfigError


def test_defaults():
    settings = get_settings()
    assert settings == Settings()
    assert settings.leibniz_max == 9
    assert settings.exhaustive_max == 12
    assert (settings.random_low, settings.random_high) == (1, 20)


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("FRIEZE_LEIBNIZ_MAX", "7")
    monkeypatch.setenv("FRIEZE_LOG_LEVEL", "debug")
    monkeypatch.setenv("FRIEZE_RANDOM_HIGH", " ")
    settings = get_settings()
    assert settings.leibniz_max == 7
    assert settings.log_level == "DEBUG"
    assert settings.random_high == 20


@pytest.mark.parametrize("key, value", [
    ("FRIEZE_LEIBNIZ_MAX", "nine"),
    ("FRIEZE_RANDOM_LOW", "0"),
    ("FRIEZE_RANDOM_HIGH", "-3"),
    ("FRIEZE_MAX_RESEEDS", "0"),
    ("FRIEZE_LOG_LEVEL", "LOUD"),
])
def test_invalid_settings(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError) as info:
        get_settings()
    assert info.value.status_code == 2


def test_configure_logging(monkeypatch):
    configure_logging("INFO")
    assert logging.getLogger().level == logging.INFO
    monkeypatch.setenv("FRIEZE_LOG_LEVEL", "ERROR")
    configure_logging()
    assert logging.getLogger().level == logging.ERROR
