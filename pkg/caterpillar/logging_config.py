import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from .config import get_env


def setup_logging() -> None:
    """
    Configure logging for command-line runs.

    - Logs to stderr so stdout carries only the report
    - Level taken from LOG_LEVEL (default WARNING)
    - Optionally logs to file if LOG_TO_FILE environment variable is set
    """
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(funcName)s - %(message)s"
    date_format = "%Y-%m-%d %H:%M:%S"

    formatter = logging.Formatter(log_format, datefmt=date_format)
    level = getattr(logging, get_env("LOG_LEVEL", "WARNING").upper(), logging.WARNING)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if get_env("LOG_TO_FILE", "false").lower() == "true":
        logs_dir = Path(__file__).parent.parent / "logs"
        logs_dir.mkdir(exist_ok=True)
        log_file = logs_dir / "caterpillar.log"

        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5,
            encoding="utf-8"
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance for the given module name.

    Args:
        name: Usually __name__ from the calling module

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)
