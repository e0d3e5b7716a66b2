"""
gridbond bondage engine: exact total bondage search with symmetry reduction.
"""

from .subsets import SubsetSpace, canonical_subsets, orbit
from .engine import (
    INFINITY, BondageStatus, SearchMode, SearchStats, BondageResult,
    BondageEngine, total_bondage, verify_witness
)
from .experiment import ConjectureRow, run_conjecture_experiment

__all__ = [
    "SubsetSpace",
    "canonical_subsets",
    "orbit",
    "INFINITY",
    "BondageStatus",
    "SearchMode",
    "SearchStats",
    "BondageResult",
    "BondageEngine",
    "total_bondage",
    "verify_witness",
    "ConjectureRow",
    "run_conjecture_experiment",
]
