"""
Configuration manager for evchar.
Handles the user configuration file, run guards and acceptance-suite bounds.
"""

import os
import json
from copy import deepcopy
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Any, Optional

from logger import get_logger

logger = get_logger(__name__)

CONFIG_DIR_ENV = "EVCHAR_CONFIG_DIR"
CACHE_ENV = "EVCHAR_CACHE"
OUTPUT_FORMATS = ("json", "csv", "text")

# Default configuration
DEFAULT_CONFIG = {
    "run": {
        "max_n": 15,
        "workers": 1,
        "cache_path": None,
        "output": "json"
    },
    "suite": {
        "quick": {
            "q1_n_max": 6,
            "strong_n_max": 5,
            "conj_n1_n_max": 6,
            "closed_form_n_max": 6,
            "thm32_n_max": 5,
            "path_n_max": 10,
            "bijection_n_max": 8,
            "riordan_d_max": 5,
            "trinomial_d_max": 3,
            "ct_intermediate_d_max": 3,
            "jacobi_trudi_n_max": 6,
            "three_way_n_max": 4,
            "qseries_order": 6,
            "qseries_n2_order": 4,
            "orthogonality_n_max": 6,
            "sign_twist_n_max": 8,
            "hook_n_max": 8,
            "counterexamples": False
        },
        "full": {
            "q1_n_max": 12,
            "strong_n_max": 8,
            "conj_n1_n_max": 12,
            "closed_form_n_max": 12,
            "thm32_n_max": 8,
            "path_n_max": 12,
            "bijection_n_max": 10,
            "riordan_d_max": 8,
            "trinomial_d_max": 5,
            "ct_intermediate_d_max": 4,
            "jacobi_trudi_n_max": 8,
            "three_way_n_max": 6,
            "qseries_order": 10,
            "qseries_n2_order": 8,
            "orthogonality_n_max": 8,
            "sign_twist_n_max": 12,
            "hook_n_max": 10,
            "counterexamples": True
        }
    },
    "logging": {
        "level": "INFO",
        "log_file": None
    }
}


@dataclass
class RunConfig:
    """Resolved run settings; validated on construction."""

    max_n: int = 15
    workers: int = 1
    cache_path: Optional[str] = None
    output: str = "json"

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError(f"max_n must be at least 1, got {self.max_n}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.output not in OUTPUT_FORMATS:
            raise ValueError(f"output must be one of {OUTPUT_FORMATS}, got {self.output!r}")


def get_config_path() -> Path:
    """Get the path to the user configuration file."""
    override = os.environ.get(CONFIG_DIR_ENV)
    config_dir = Path(override) if override else Path.home() / ".evchar"
    config_dir.mkdir(parents=True, exist_ok=True)
    return config_dir / "config.json"

def load_user_config() -> Dict[str, Any]:
    """Load user configuration from file."""
    config_path = get_config_path()

    if not config_path.exists():
        # Create default config
        save_user_config(DEFAULT_CONFIG)
        return deepcopy(DEFAULT_CONFIG)

    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            user_config = json.load(f)

        # Merge with defaults
        return merge_configs(DEFAULT_CONFIG, user_config)

    except (OSError, json.JSONDecodeError) as e:
        logger.warning(f"Failed to load user config: {e}")
        return deepcopy(DEFAULT_CONFIG)

def save_user_config(config: Dict[str, Any]) -> bool:
    """Save user configuration to file."""
    try:
        config_path = get_config_path()
        with open(config_path, 'w', encoding='utf-8') as f:
            json.dump(config, f, indent=2)
        return True
    except OSError as e:
        logger.error(f"Failed to save user config: {e}")
        return False

def merge_configs(default: Dict[str, Any], user: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively merge user config with defaults."""
    result = deepcopy(default)

    for key, value in user.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = merge_configs(result[key], value)
        else:
            result[key] = value

    return result

def get_run_config(
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
    cache_path: Optional[str] = None,
    output: Optional[str] = None,
) -> RunConfig:
    """
    Resolve run settings: explicit arguments, then EVCHAR_CACHE for the cache
    path, then the user file, then defaults.
    """
    run = load_user_config().get("run", {})
    if cache_path is None:
        cache_path = os.environ.get(CACHE_ENV) or run.get("cache_path")
    return RunConfig(
        max_n=max_n if max_n is not None else run.get("max_n", 15),
        workers=workers if workers is not None else run.get("workers", 1),
        cache_path=cache_path,
        output=output if output is not None else run.get("output", "json"),
    )

def get_suite_config(level: str) -> Dict[str, Any]:
    """Get acceptance-suite bounds for a level."""
    config = load_user_config()
    suite = config.get("suite", {})
    if level not in suite:
        raise ValueError(f"unknown suite level {level!r}, expected one of {sorted(suite)}")
    return suite[level]

def get_logging_config() -> Dict[str, Any]:
    """Get logging configuration."""
    config = load_user_config()
    return config.get("logging", {})

def update_config(section: str, key: str, value: Any) -> bool:
    """Update a specific configuration value."""
    config = load_user_config()

    if section not in config:
        config[section] = {}

    config[section][key] = value

    return save_user_config(config)

def reset_config() -> bool:
    """Reset configuration to defaults."""
    return save_user_config(DEFAULT_CONFIG)

def show_config() -> str:
    """Current configuration as indented JSON."""
    config = load_user_config()
    return json.dumps(config, indent=2)
