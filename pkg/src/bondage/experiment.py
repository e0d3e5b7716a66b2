"""
Measurements of b_t(G_{n,4}) where only upper bounds are known.

For n = 0, 2, 3 (mod 5) the four-row bondage values are bounded by 4, 3
and 4 but whether the bounds are attained is open. The experiment computes
exact values and reports them against the bounds; it asserts nothing.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional

from ..formulas.closed_forms import bondage_formula
from ..grid.grid_model import GridSpec, build_grid
from .engine import BondageResult, BondageStatus, total_bondage

logger = logging.getLogger(__name__)

OPEN_RESIDUES = (0, 2, 3)


@dataclass
class ConjectureRow:
    """One measured grid size."""

    n: int
    upper_bound: int
    result: BondageResult

    @property
    def tight(self) -> Optional[bool]:
        """
        True/False once the value is exact; None while only bounded below.

        A search that rules out every subset up to the bound contradicts the
        bound and is never tight.
        """
        status = self.result.status
        if status is BondageStatus.EXACT:
            return self.result.value == self.upper_bound
        if status is BondageStatus.INFINITY or self.result.value >= self.upper_bound:
            logger.error(f"G_{{{self.n},4}}: search result {self.result} contradicts the bound {self.upper_bound}")
            return False
        return None

    def to_dict(self, include_elapsed: bool = False) -> Dict[str, Any]:
        return {
            "n": self.n,
            "residue": self.n % 5,
            "upper_bound": self.upper_bound,
            "bondage": self.result.to_dict(include_elapsed),
            "tight": self.tight,
        }


def run_conjecture_experiment(
    n_values: Iterable[int],
    k_max: Optional[int] = None,
    config: Optional[Dict[str, Any]] = None,
) -> List[ConjectureRow]:
    """
    Compute b_t(G_{n,4}) for the open residues among n_values.

    Args:
        n_values: Candidate column counts; values with n < 4 or another
            residue are skipped.
        k_max: Largest subset size searched; defaults to each n's bound.
        config: Optional configuration dict passed to the engine.

    Returns:
        List[ConjectureRow]: One row per measured n, in increasing order.
    """
    rows = []
    for n in sorted(set(n_values)):
        if n < 4 or n % 5 not in OPEN_RESIDUES:
            continue
        bound = bondage_formula(n, 4).value
        logger.info(f"Conjecture experiment: G_{{{n},4}} with bound {bound}, k_max={k_max or bound}")
        result = total_bondage(build_grid(GridSpec(n, 4)), k_max or bound, config=config)
        rows.append(ConjectureRow(n, bound, result))
    return rows
