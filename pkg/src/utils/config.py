"""
Configuration loading for gridbond.

Settings come from three layers, lowest precedence first: DEFAULT_CONFIG,
an optional YAML file, and GRIDBOND_* environment variables (a .env file in
the working directory is honoured through python-dotenv).
"""

import os
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    "bruteforce_cap": 24,
    "enumerate_cap": 20,
    "enumerate_limit": 10000,
    "dp_max_rows": 12,
    "workers": 1,
    "parallel_threshold": 2000,
    "cache_enabled": True,
    "cache_dir": str(Path.home() / ".gridbond" / "cache"),
    "seed": 20100,
    "table_k_max": 2,
    "log_level": "INFO",
    "log_file": str(Path.home() / ".gridbond" / "gridbond.log"),
}

DEFAULT_CONFIG_FILE = Path("config") / "gridbond.yaml"

# Environment variable -> (config key, converter)
ENV_OVERRIDES = {
    "GRIDBOND_CACHE_DIR": ("cache_dir", str),
    "GRIDBOND_LOG_LEVEL": ("log_level", str),
    "GRIDBOND_LOG_FILE": ("log_file", str),
    "GRIDBOND_WORKERS": ("workers", int),
}


def _read_yaml(path: Path) -> Dict[str, Any]:
    """
    Read a YAML config file.

    Args:
        path: The file to read.

    Returns:
        Dict[str, Any]: The mapping stored in the file, or an empty dict.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        logger.warning(f"Could not read config file {path}: {e}")
        return {}

    if not isinstance(data, dict):
        logger.warning(f"Ignoring config file {path}: top level is not a mapping")
        return {}
    return data


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Build the effective configuration.

    Args:
        path: Explicit YAML file. Falls back to GRIDBOND_CONFIG, then to
            config/gridbond.yaml when it exists.

    Returns:
        Dict[str, Any]: A fresh dict; callers may mutate it.
    """
    load_dotenv()
    config = dict(DEFAULT_CONFIG)

    config_path = path or os.environ.get("GRIDBOND_CONFIG")
    if config_path:
        config.update(_read_yaml(Path(config_path)))
    elif DEFAULT_CONFIG_FILE.exists():
        config.update(_read_yaml(DEFAULT_CONFIG_FILE))

    for env_name, (key, convert) in ENV_OVERRIDES.items():
        raw = os.environ.get(env_name)
        if raw is None:
            continue
        try:
            config[key] = convert(raw)
        except ValueError:
            logger.warning(f"Ignoring {env_name}={raw!r}: expected {convert.__name__}")

    return config
