"""
gridbond shared utilities: configuration and the exception hierarchy.
"""

from .config import DEFAULT_CONFIG, load_config
from .errors import (
    GridBondError, InvalidVertex, InvalidColumn, EdgeNotPresent,
    InvalidSymmetry, InvalidInput, TooLarge, NoneAvailable, ParseError
)

__all__ = [
    "DEFAULT_CONFIG",
    "load_config",
    "GridBondError",
    "InvalidVertex",
    "InvalidColumn",
    "EdgeNotPresent",
    "InvalidSymmetry",
    "InvalidInput",
    "TooLarge",
    "NoneAvailable",
    "ParseError",
]
