#!/usr/bin/env python3
"""
gridbond - Main entry point for the command-line tool.
"""

import os
import sys
import argparse
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

logger = logging.getLogger("gridbond")

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(config: Dict[str, Any], verbose: bool = False):
    """
    Configure the root logger once.

    Messages go to stderr so stdout stays clean for results, and to the
    configured log file unless log_file is empty.

    Args:
        config: Effective configuration (reads "log_level" and "log_file").
        verbose: Force DEBUG level.
    """
    level = logging.DEBUG if verbose else getattr(logging, str(config.get("log_level", "INFO")).upper(), logging.INFO)
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    log_file = config.get("log_file")
    if log_file:
        path = Path(os.path.expanduser(log_file))
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(path))
        except OSError as e:
            sys.stderr.write(f"Warning: cannot open log file {path}: {e}\n")

    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


def _early_options(argv: List[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config")
    parser.add_argument("--verbose", "-v", action="store_true")
    options, _ = parser.parse_known_args(argv)
    return options


def main(argv: Optional[List[str]] = None):
    """
    Main entry point for the gridbond command.
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        from gridbond.cli.commands import run
        from gridbond.utils.config import load_config
    except ImportError:
        try:
            from src.cli.commands import run
            from src.utils.config import load_config
        except ImportError as e:
            sys.stderr.write(f"Error: Failed to import required modules: {e}\n")
            sys.stderr.write("Please make sure all dependencies are installed by running:\n")
            sys.stderr.write("pip install -r requirements.txt\n")
            sys.exit(1)

    options = _early_options(argv)
    config = load_config(options.config)
    configure_logging(config, options.verbose)
    logger.debug(f"Running with arguments {argv}")
    sys.exit(run(argv, config))


if __name__ == "__main__":
    main()
