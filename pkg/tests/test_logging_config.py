import logging
import sys

import pytest

from caterpillar.logging_config import get_logger, setup_logging


@pytest.fixture
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield root
    root.handlers[:] = handlers
    root.setLevel(level)


def test_setup_logging_writes_to_stderr(monkeypatch, restore_root_logger):
    monkeypatch.setenv("LOG_LEVEL", "info")
    monkeypatch.setenv("LOG_TO_FILE", "false")
    setup_logging()
    assert restore_root_logger.level == logging.INFO
    assert len(restore_root_logger.handlers) == 1
    assert restore_root_logger.handlers[0].stream is sys.stderr


def test_unknown_level_falls_back_to_warning(monkeypatch, restore_root_logger):
    monkeypatch.setenv("LOG_LEVEL", "chatty")
    monkeypatch.setenv("LOG_TO_FILE", "false")
    setup_logging()
    assert restore_root_logger.level == logging.WARNING


def test_get_logger_uses_module_names():
    assert get_logger("caterpillar.chains") is logging.getLogger("caterpillar.chains")


def test_get_env_requires_a_value_without_default(monkeypatch):
    from caterpillar.config import get_env

    monkeypatch.delenv("CATERPILLAR_UNSET", raising=False)
    assert get_env("CATERPILLAR_UNSET", "x") == "x"
    with pytest.raises(RuntimeError):
        get_env("CATERPILLAR_UNSET")
