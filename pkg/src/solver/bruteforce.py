"""
Exhaustive oracles for gamma(G) and gamma_t(G).

The searches grow candidate sets in increasing cardinality with an early
exit. At each step the lowest-index vertex that is still undominated must
gain a dominator, so only its (closed, for ordinary domination) neighbours
are tried; every set of the minimum size is reachable this way. These
oracles share nothing with the profile DP and are used to cross-check it.
"""

import logging
from itertools import combinations
from typing import Any, Dict, List, Optional

from ..grid.grid_model import GridGraph
from ..utils.config import DEFAULT_CONFIG
from ..utils.errors import InvalidInput, TooLarge
from .vertex_set import (
    Enumeration, GammaResult, VertexSet, neighborhood_union,
)

logger = logging.getLogger(__name__)


def _cap(config: Optional[Dict[str, Any]], key: str, override: Optional[int]) -> int:
    if override is not None:
        return override
    return (config or {}).get(key, DEFAULT_CONFIG[key])


def _check_size(g: GridGraph, cap: int, what: str):
    if g.live_count > cap:
        raise TooLarge(f"{what}: {g.live_count} live vertices exceeds the cap of {cap}")


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class _TotalSearch:
    """Depth-bounded search for a total dominating set of a given size."""

    def __init__(self, g: GridGraph):
        self.adjacency = g.adjacency
        self.live = g.live_mask
        self.nodes = 0

    def run(self, chosen: int, covered: int, budget: int) -> Optional[int]:
        self.nodes += 1
        pending = self.live & ~covered
        if not pending:
            return chosen
        if budget == 0:
            return None
        # A vertex totally dominates at most four vertices.
        if pending.bit_count() > 4 * budget:
            return None
        target = _lowest_bit(pending)
        options = self.adjacency[target] & ~chosen
        while options:
            low = options & -options
            options ^= low
            u = low.bit_length() - 1
            found = self.run(chosen | low, covered | self.adjacency[u], budget - 1)
            if found is not None:
                return found
        return None


class _OrdinarySearch:
    """Depth-bounded search for a dominating set of a given size."""

    def __init__(self, g: GridGraph):
        self.adjacency = g.adjacency
        self.live = g.live_mask
        self.nodes = 0

    def run(self, chosen: int, covered: int, budget: int) -> Optional[int]:
        self.nodes += 1
        pending = self.live & ~covered
        if not pending:
            return chosen
        if budget == 0:
            return None
        if pending.bit_count() > 5 * budget:
            return None
        target = _lowest_bit(pending)
        options = (self.adjacency[target] | (1 << target)) & ~chosen
        while options:
            low = options & -options
            options ^= low
            u = low.bit_length() - 1
            found = self.run(chosen | low, covered | low | self.adjacency[u], budget - 1)
            if found is not None:
                return found
        return None


def gamma_bruteforce(
    g: GridGraph,
    cap: Optional[int] = None,
    config: Optional[Dict[str, Any]] = None,
) -> GammaResult:
    """
    Compute the domination number gamma(G) exhaustively.

    Args:
        g: The graph.
        cap: Maximum live vertex count; defaults to config["bruteforce_cap"].
        config: Optional configuration dict.

    Returns:
        GammaResult: gamma(G) with a witness; undefined only for an empty graph.

    Raises:
        TooLarge: If the graph has more live vertices than the cap.
    """
    _check_size(g, _cap(config, "bruteforce_cap", cap), "gamma_bruteforce")
    if g.live_count == 0:
        return GammaResult.undefined()

    search = _OrdinarySearch(g)
    for size in range(1, g.live_count + 1):
        found = search.run(0, 0, size)
        if found is not None:
            logger.debug(f"gamma({g.describe()}) = {size} after {search.nodes} nodes")
            return GammaResult(size, VertexSet(g.spec, found))
    return GammaResult.undefined()


def gamma_t_bruteforce(
    g: GridGraph,
    required: Optional[VertexSet] = None,
    cap: Optional[int] = None,
    config: Optional[Dict[str, Any]] = None,
) -> GammaResult:
    """
    Compute the total domination number, optionally over sets containing
    a required subset.

    Args:
        g: The graph.
        required: Vertices every candidate set must contain.
        cap: Maximum live vertex count; defaults to config["bruteforce_cap"].
        config: Optional configuration dict.

    Returns:
        GammaResult: The minimum with a witness, or undefined when g has an
        isolated vertex, is empty, or no admissible set exists.

    Raises:
        TooLarge: If the graph has more live vertices than the cap.
        InvalidInput: If required contains a vertex that is not live.
    """
    _check_size(g, _cap(config, "bruteforce_cap", cap), "gamma_t_bruteforce")
    base = required.mask if required is not None else 0
    if base & ~g.live_mask:
        raise InvalidInput("Required vertices must be live vertices of the graph")
    if g.live_count == 0 or g.has_isolated_vertex():
        return GammaResult.undefined()

    search = _TotalSearch(g)
    covered = neighborhood_union(g, base)
    for size in range(max(base.bit_count(), 1), g.live_count + 1):
        found = search.run(base, covered, size - base.bit_count())
        if found is not None:
            logger.debug(f"gamma_t({g.describe()}) = {size} after {search.nodes} nodes")
            return GammaResult(size, VertexSet(g.spec, found))
    return GammaResult.undefined()


def enumerate_min_tds(
    g: GridGraph,
    limit: Optional[int] = None,
    cap: Optional[int] = None,
    config: Optional[Dict[str, Any]] = None,
) -> Enumeration:
    """
    List every minimum total dominating set.

    Sets are produced in lexicographic (i, j) order; when more than `limit`
    exist the first `limit` are returned and the truncation flag is set.

    Raises:
        TooLarge: If the graph has more live vertices than config["enumerate_cap"].
    """
    _check_size(g, _cap(config, "enumerate_cap", cap), "enumerate_min_tds")
    if limit is None:
        limit = (config or {}).get("enumerate_limit", DEFAULT_CONFIG["enumerate_limit"])

    gamma = gamma_t_bruteforce(g, cap=g.live_count)
    if gamma.is_undefined:
        return Enumeration([], False)

    adjacency = g.adjacency
    live = g.live_mask
    cells = [index for index in range(g.spec.vertex_count) if (live >> index) & 1]
    found: List[VertexSet] = []
    for combo in combinations(cells, gamma.value):
        covered = 0
        for index in combo:
            covered |= adjacency[index]
        if live & ~covered:
            continue
        if len(found) == limit:
            logger.info(f"Enumeration of {g.describe()} truncated at {limit} sets")
            return Enumeration(found, True)
        mask = 0
        for index in combo:
            mask |= 1 << index
        found.append(VertexSet(g.spec, mask))

    return Enumeration(found, False)
