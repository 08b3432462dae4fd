"""
Tests for the configuration manager.
"""

import json

import pytest

from config_manager import (
    CACHE_ENV, DEFAULT_CONFIG, RunConfig, get_config_path, get_logging_config, get_run_config,
    get_suite_config, load_user_config, merge_configs, reset_config, save_user_config,
    show_config, update_config,
)


class TestRunConfig:
    """Test run setting validation."""

    def test_defaults(self):
        """Test the default run settings."""
        config = RunConfig()
        assert config.max_n == 15
        assert config.output == "json"

    @pytest.mark.parametrize("kwargs", [
        {"max_n": 0},
        {"workers": 0},
        {"output": "xml"},
    ])
    def test_invalid(self, kwargs):
        """Test that out-of-range run settings raise ValueError."""
        with pytest.raises(ValueError):
            RunConfig(**kwargs)


class TestUserConfig:
    """Test the configuration file."""

    def test_path_honors_override(self, isolated_config):
        """Test that EVCHAR_CONFIG_DIR moves the config file."""
        assert get_config_path() == isolated_config / "config.json"

    def test_missing_file_writes_defaults(self, isolated_config):
        """Test that a missing file is created with the defaults."""
        (isolated_config / "config.json").unlink()
        config = load_user_config()
        assert config == DEFAULT_CONFIG
        assert (isolated_config / "config.json").exists()

    def test_corrupt_file_falls_back(self, isolated_config):
        """Test that unreadable JSON falls back to the defaults."""
        (isolated_config / "config.json").write_text("{not json", encoding="utf-8")
        assert load_user_config()["run"]["max_n"] == DEFAULT_CONFIG["run"]["max_n"]

    def test_merge_keeps_defaults(self):
        """Test that merging keeps default keys the user file lacks."""
        merged = merge_configs({"a": {"x": 1, "y": 2}}, {"a": {"y": 3}, "b": 4})
        assert merged == {"a": {"x": 1, "y": 3}, "b": 4}

    def test_update_and_reset(self):
        """Test storing one value and resetting to the defaults."""
        assert update_config("run", "max_n", 9)
        assert load_user_config()["run"]["max_n"] == 9
        assert reset_config()
        assert load_user_config()["run"]["max_n"] == 15

    def test_loaded_config_is_a_copy(self):
        """Test that changing a loaded config leaves DEFAULT_CONFIG alone."""
        load_user_config()["run"]["max_n"] = 1
        assert DEFAULT_CONFIG["run"]["max_n"] == 15

    def test_show_is_json(self):
        """Test that show_config prints JSON."""
        assert json.loads(show_config())["run"]["workers"] == 1

    def test_logging_section(self):
        """Test reading the logging section."""
        assert get_logging_config()["level"] == "ERROR"


class TestResolution:
    """Test precedence of run settings."""

    def test_explicit_wins(self):
        """Test that an explicit argument beats the file."""
        update_config("run", "max_n", 9)
        assert get_run_config(max_n=4).max_n == 4

    def test_file_beats_default(self):
        """Test that the file beats the built-in default."""
        update_config("run", "workers", 3)
        assert get_run_config().workers == 3

    def test_cache_from_environment(self, monkeypatch, tmp_path):
        """Test that EVCHAR_CACHE sits between the flag and the file."""
        monkeypatch.setenv(CACHE_ENV, str(tmp_path / "env.cache"))
        assert get_run_config().cache_path == str(tmp_path / "env.cache")
        assert get_run_config(cache_path="flag.cache").cache_path == "flag.cache"

    def test_invalid_file_value(self):
        """Test that an invalid output format in the file raises ValueError."""
        save_user_config({"run": {"output": "yaml"}})
        with pytest.raises(ValueError):
            get_run_config()


class TestSuiteConfig:
    """Test acceptance-suite bounds."""

    def test_levels(self):
        """Test that the full level has wider bounds than the quick level."""
        quick, full = get_suite_config("quick"), get_suite_config("full")
        assert quick["q1_n_max"] < full["q1_n_max"]
        assert full["counterexamples"] is True

    def test_unknown_level(self):
        """Test that an unknown suite level raises ValueError."""
        with pytest.raises(ValueError):
            get_suite_config("medium")
