"""
Pytest configuration file for gridbond tests.
"""

import os
import sys
import pytest

# Add the repository root and the src directory to the Python path
ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, ROOT)
sys.path.insert(0, os.path.join(ROOT, "src"))

from src.grid.grid_model import GridSpec, build_grid
from src.utils.config import DEFAULT_CONFIG


@pytest.fixture
def grid():
    """
    Build clean grids by size.

    Usage: grid(6, 4) returns G_{6,4}.
    """
    def _build(n, m):
        return build_grid(GridSpec(n, m))
    return _build


@pytest.fixture
def config(tmp_path):
    """
    A configuration that keeps the results cache and the log file inside
    the test's temporary directory.
    """
    cfg = dict(DEFAULT_CONFIG)
    cfg["cache_dir"] = str(tmp_path / "cache")
    cfg["log_file"] = ""
    return cfg


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch, tmp_path):
    """Keep GRIDBOND_* variables from the developer's shell out of the tests."""
    for name in list(os.environ):
        if name.startswith("GRIDBOND_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
