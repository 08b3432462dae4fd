"""
Pytest configuration and common fixtures for evchar tests.
"""

import logging

import pytest
from click.testing import CliRunner

from algebra.char_cache import CACHE_HEADER, CharacterCache
from algebra.characters import CharacterEngine
from config_manager import CACHE_ENV, CONFIG_DIR_ENV, update_config


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the user configuration at a scratch directory for every test."""
    config_dir = tmp_path / "config"
    monkeypatch.setenv(CONFIG_DIR_ENV, str(config_dir))
    monkeypatch.delenv(CACHE_ENV, raising=False)
    # Keep stderr quiet so CLI output parses as JSON
    update_config("logging", "level", "ERROR")
    yield config_dir
    logging.getLogger("evchar").handlers.clear()


@pytest.fixture
def engine():
    """A character engine with its own empty cache."""
    return CharacterEngine(CharacterCache())


@pytest.fixture
def cache_file(tmp_path):
    """Path for a character cache file that does not exist yet."""
    return tmp_path / "chars.cache"


@pytest.fixture
def valid_cache_file(tmp_path):
    """A small well-formed cache file."""
    path = tmp_path / "valid.cache"
    path.write_text(
        CACHE_HEADER + "\n"
        "2;1,1;1\n"
        "1,1;2;-1\n"
        "4,4;1,1,1,1,1,1,1,1;14\n",
        encoding="utf-8",
    )
    return path


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()
