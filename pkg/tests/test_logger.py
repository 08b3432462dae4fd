"""
Tests for logging setup.
"""

import logging

from logger import get_logger, setup_logger


class TestLogger:
    """Test the evchar logger hierarchy."""

    def test_module_loggers_are_children(self):
        """Test that module loggers hang under the evchar logger."""
        assert get_logger("algebra.characters").name == "evchar.algebra.characters"
        assert get_logger().name == "evchar"

    def test_setup_replaces_handlers(self):
        """Test that a second setup does not stack handlers."""
        setup_logger(level="WARNING")
        logger = setup_logger(level="WARNING")
        assert len(logger.handlers) == 1
        assert logger.level == logging.WARNING

    def test_log_file_captures_debug(self, tmp_path):
        """Test that the log file receives DEBUG records the console filters out."""
        log_file = tmp_path / "evchar.log"
        setup_logger(level="ERROR", log_file=str(log_file))
        get_logger("test").debug("written to file only")
        for handler in logging.getLogger("evchar").handlers:
            handler.flush()
        assert "written to file only" in log_file.read_text(encoding="utf-8")
