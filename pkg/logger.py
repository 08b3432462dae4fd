"""
Logging setup for evchar. Reports own stdout; every log line goes to stderr
or the optional log file.
"""

import logging
import sys
from typing import Optional

ROOT_LOGGER = "evchar"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logger(name: str = ROOT_LOGGER, level: str = "INFO", log_file: Optional[str] = None) -> logging.Logger:
    """
    Configure the evchar logger, replacing any handlers from an earlier call.

    Args:
        name: Logger name
        level: Console level name (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional path that receives every record at DEBUG

    Returns:
        Configured logger
    """
    numeric = getattr(logging, level.upper())
    logger = logging.getLogger(name)
    logger.setLevel(numeric)
    logger.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(numeric)
    console.setFormatter(formatter)
    logger.addHandler(console)

    if log_file:
        try:
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
        except OSError as e:
            logger.warning(f"Cannot open log file {log_file}: {e}")
        else:
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
            logger.setLevel(logging.DEBUG)

    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Child of the evchar logger for a module, usually get_logger(__name__)."""
    return logging.getLogger(f"{ROOT_LOGGER}.{name}" if name else ROOT_LOGGER)
