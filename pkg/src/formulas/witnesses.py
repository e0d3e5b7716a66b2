"""
Edge sets whose removal raises gamma_t, one per covered grid size.

Most sizes have an explicit construction. The small cases settled by
direct checking (G_{4,4} to G_{8,4} and paths) are found by a first-hit
bondage search and padded with further removable edges up to the value of
bondage_formula; removing more edges never lowers gamma_t.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional

from ..grid.grid_model import Edge, GridSpec, build_grid, transpose_edge
from ..utils.errors import NoneAvailable
from .closed_forms import bondage_formula

logger = logging.getLogger(__name__)

_DIRECT_CHECK_FOUR_ROWS = (4, 5, 6, 7, 8)


class WitnessSource(Enum):
    """Where a witness comes from."""

    CONSTRUCTION = "construction"
    DIRECT_CHECK = "direct_check"


@dataclass(frozen=True)
class WitnessRecord:
    """A witness edge set of G_{n,m} and its provenance."""

    n: int
    m: int
    edges: FrozenSet[Edge]
    source: WitnessSource

    @property
    def names(self) -> List[str]:
        return [e.name for e in sorted(self.edges)]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "m": self.m, "edges": self.names, "source": self.source.value}


def _constructed(n: int, m: int) -> Optional[List[Edge]]:
    """Explicit witnesses for n >= m."""
    H, V = Edge.horizontal, Edge.vertical
    if m == 2 and n >= 2:
        if n % 3 == 0:
            return [H(n - 1, 1)]
        if n % 3 == 2:
            return [H(n - 1, 1), H(n - 1, 2)]
        if n >= 4:
            return [H(n - 2, 1), H(n - 1, 1), H(n - 1, 2)]
    if m == 3 and n >= 3:
        return [H(n - 1, 2)]
    if m == 4:
        residue = n % 5
        if residue == 1 and n >= 11:
            return [V(n, 2)]
        if residue == 4 and n >= 9:
            return [H(n - 1, 1), H(n - 1, 2)]
        if residue == 2 and n >= 12:
            return [H(n - 1, 1), H(n - 1, 2), V(n, 2)]
        if residue in (0, 3) and n >= 10:
            return [H(n - 5, j) for j in range(1, 5)]
    return None


def _is_direct_check(n: int, m: int) -> bool:
    return (m == 4 and n in _DIRECT_CHECK_FOUR_ROWS) or (m == 1 and n >= 4)


@lru_cache(maxsize=64)
def _searched(n: int, m: int) -> FrozenSet[Edge]:
    # Imported lazily: the engine depends on the solver, formulas do not.
    from ..bondage.engine import BondageStatus, SearchMode, total_bondage
    from ..bondage.subsets import SubsetSpace

    bound = bondage_formula(n, m).value
    g = build_grid(GridSpec(n, m))
    result = total_bondage(g, bound, use_symmetry=True, mode=SearchMode.FIRST_HIT)
    if result.status is not BondageStatus.EXACT:
        raise NoneAvailable(f"No witness of size <= {bound} found for G_{{{n},{m}}}")

    space = SubsetSpace(g.spec)
    chosen = sorted(space.to_indices(result.witness))
    for idx in range(len(space.edges)):
        if len(chosen) == bound:
            break
        if idx in chosen:
            continue
        if space.is_valid(chosen + [idx]):
            chosen.append(idx)
    logger.info(f"Direct-check witness for G_{{{n},{m}}}: {result.value} edges found, padded to {len(chosen)}")
    return space.to_edges(chosen)


def witness_record(n: int, m: int, allow_search: bool = True) -> WitnessRecord:
    """
    Get a witness edge set for G_{n,m} with its provenance.

    Args:
        n: Number of columns.
        m: Number of rows.
        allow_search: When False, sizes that need a direct-check search
            raise NoneAvailable instead of searching.

    Raises:
        NoneAvailable: If (n, m) is not covered.
    """
    a, b = (n, m) if n >= m else (m, n)
    edges = _constructed(a, b)
    source = WitnessSource.CONSTRUCTION
    if edges is None:
        if not _is_direct_check(a, b) or not allow_search:
            raise NoneAvailable(f"No witness edge set is known for G_{{{n},{m}}}")
        edges = _searched(a, b)
        source = WitnessSource.DIRECT_CHECK
    if (a, b) != (n, m):
        edges = [transpose_edge(e) for e in edges]
    return WitnessRecord(n, m, frozenset(edges), source)


def witness_edges(n: int, m: int) -> FrozenSet[Edge]:
    """
    Get an edge set whose removal from G_{n,m} raises gamma_t without
    isolating a vertex; its size is the value of bondage_formula(n, m).

    Raises:
        NoneAvailable: If (n, m) is not covered.
    """
    return witness_record(n, m).edges
