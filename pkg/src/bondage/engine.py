"""
Exact total bondage search on clean grids.

Levels k = 1, 2, ... are searched in order. Within a level, removable
subsets are visited in canonical order; a subset is a hit when its removal
raises gamma_t. The base gamma_t and one minimum witness are computed once;
a candidate that leaves that witness total dominating cannot be a hit and
is skipped without a DP call.
"""

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..grid.grid_model import Edge, GridGraph, GridSpec, build_grid
from ..solver.profile_dp import gamma_t_dp
from ..utils.config import DEFAULT_CONFIG
from ..utils.errors import InvalidInput
from .subsets import IndexSubset, SubsetSpace

logger = logging.getLogger(__name__)

INFINITY = "infinity"


class BondageStatus(Enum):
    """Outcome of a bondage search."""

    EXACT = "exact"
    INFINITY = "infinity"
    LOWER_BOUND_ONLY = "lower_bound_only"


class SearchMode(Enum):
    """Witness policy: least witness of the minimum level, or first one found."""

    CANONICAL = "canonical"
    FIRST_HIT = "first_hit"


@dataclass
class SearchStats:
    """Counters collected during one search."""

    subsets_examined: int = 0
    dp_calls: int = 0
    prefiltered: int = 0
    levels: int = 0
    elapsed: float = 0.0

    def merge(self, examined: int, dp_calls: int, prefiltered: int):
        self.subsets_examined += examined
        self.dp_calls += dp_calls
        self.prefiltered += prefiltered

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        data = {
            "subsets_examined": self.subsets_examined,
            "dp_calls": self.dp_calls,
            "prefiltered": self.prefiltered,
            "levels": self.levels,
        }
        if include_elapsed:
            data["elapsed"] = round(self.elapsed, 6)
        return data


@dataclass
class BondageResult:
    """
    A total bondage number.

    value is the bondage number for EXACT, the searched k_max for
    LOWER_BOUND_ONLY and None for INFINITY.
    """

    status: BondageStatus
    value: Optional[int] = None
    witness: Optional[FrozenSet[Edge]] = None
    base_gamma_t: Optional[int] = None
    raised_gamma_t: Optional[int] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def witness_names(self) -> List[str]:
        return [e.name for e in sorted(self.witness)] if self.witness else []

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "value": INFINITY if self.status is BondageStatus.INFINITY else self.value,
            "witness": self.witness_names,
            "gamma_t": self.base_gamma_t,
            "gamma_t_after": self.raised_gamma_t,
            "stats": self.stats.to_dict(include_elapsed),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BondageResult":
        """
        Rebuild a result from to_dict() output.

        Raises:
            ValueError: If the status is missing or unknown.
        """
        status = BondageStatus(data.get("status"))
        value = data.get("value")
        stats = data.get("stats") or {}
        return cls(
            status=status,
            value=None if status is BondageStatus.INFINITY else value,
            witness=frozenset(Edge.parse(name) for name in data.get("witness") or []) or None,
            base_gamma_t=data.get("gamma_t"),
            raised_gamma_t=data.get("gamma_t_after"),
            stats=SearchStats(
                subsets_examined=stats.get("subsets_examined", 0),
                dp_calls=stats.get("dp_calls", 0),
                prefiltered=stats.get("prefiltered", 0),
                levels=stats.get("levels", 0),
                elapsed=stats.get("elapsed", 0.0),
            ),
        )

    def __str__(self) -> str:
        if self.status is BondageStatus.INFINITY:
            return INFINITY
        if self.status is BondageStatus.LOWER_BOUND_ONLY:
            return f"> {self.value}"
        return str(self.value)


class _CandidateEvaluator:
    """Decides whether removing an index subset raises gamma_t."""

    def __init__(self, spec: GridSpec, base_value: int, witness_mask: int, config: Dict[str, Any]):
        self.space = SubsetSpace(spec)
        self.graph = build_grid(spec)
        self.base_value = base_value
        self.witness_mask = witness_mask
        self.config = config
        self.dp_calls = 0
        self.prefiltered = 0

    def witness_survives(self, subset: IndexSubset) -> bool:
        """True iff the cached witness still totally dominates g - subset."""
        cut: Dict[int, int] = {}
        for idx in subset:
            a, b = self.space.ends[idx]
            cut[a] = cut.get(a, 0) | (1 << b)
            cut[b] = cut.get(b, 0) | (1 << a)
        adjacency = self.graph.adjacency
        for cell, lost in cut.items():
            if not adjacency[cell] & ~lost & self.witness_mask:
                return False
        return True

    def raised_value(self, subset: IndexSubset) -> Optional[int]:
        """gamma_t of g - subset when it exceeds the base value, else None."""
        if self.witness_survives(subset):
            self.prefiltered += 1
            return None
        self.dp_calls += 1
        reduced = self.graph.remove_edges(self.space.to_edges(subset))
        result = gamma_t_dp(reduced, want_witness=False, config=self.config)
        if result.value is not None and result.value > self.base_value:
            return result.value
        return None


def _evaluate_chunk(payload: Tuple) -> Tuple[List[Tuple[IndexSubset, int]], int, int, int]:
    """Pool worker: evaluate a chunk of subsets of one level."""
    n, m, base_value, witness_mask, config, subsets, stop_at_first = payload
    evaluator = _CandidateEvaluator(GridSpec(n, m), base_value, witness_mask, config)
    hits = []
    examined = 0
    for subset in subsets:
        examined += 1
        raised = evaluator.raised_value(subset)
        if raised is not None:
            hits.append((subset, raised))
            if stop_at_first:
                break
    return hits, examined, evaluator.dp_calls, evaluator.prefiltered


class BondageEngine:
    """
    Total bondage search for one clean grid.

    Configuration keys read: "workers", "parallel_threshold",
    "dp_max_rows".
    """

    def __init__(
        self,
        g: GridGraph,
        use_symmetry: bool = True,
        mode: SearchMode = SearchMode.CANONICAL,
        config: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize the engine.

        Args:
            g: A clean grid without isolated vertices.
            use_symmetry: Search one subset per symmetry orbit.
            mode: Witness policy.
            config: Optional configuration dict.

        Raises:
            InvalidInput: If g is not a clean grid or has an isolated vertex.
        """
        if not g.is_clean:
            raise InvalidInput("Total bondage is computed on clean grids only")
        if g.has_isolated_vertex():
            raise InvalidInput(f"{g.describe()} has an isolated vertex; b_t is not defined")
        self.g = g
        self.spec = g.spec
        self.use_symmetry = use_symmetry
        self.mode = mode
        self.config = dict(config or {})
        self.workers = self.config.get("workers", DEFAULT_CONFIG["workers"])
        self.parallel_threshold = self.config.get("parallel_threshold", DEFAULT_CONFIG["parallel_threshold"])
        self.space = SubsetSpace(self.spec)

        base = gamma_t_dp(g, config=self.config)
        self.base_value = base.value
        self.witness_mask = base.witness.mask
        logger.info(f"Bondage search on {g.describe()}: gamma_t = {self.base_value}")

    @property
    def _stop_at_first(self) -> bool:
        # Without orbit reduction the first hit in canonical order is the least.
        return self.mode is SearchMode.FIRST_HIT or not self.use_symmetry

    def _evaluate_serial(self, candidates: Iterable[IndexSubset], stats: SearchStats) -> List[Tuple[IndexSubset, int]]:
        evaluator = _CandidateEvaluator(self.spec, self.base_value, self.witness_mask, self.config)
        hits = []
        examined = 0
        for subset in candidates:
            examined += 1
            raised = evaluator.raised_value(subset)
            if raised is not None:
                hits.append((subset, raised))
                if self._stop_at_first:
                    break
        stats.merge(examined, evaluator.dp_calls, evaluator.prefiltered)
        return hits

    def _evaluate_parallel(self, candidates: Sequence[IndexSubset], stats: SearchStats) -> List[Tuple[IndexSubset, int]]:
        chunk_size = max(1, -(-len(candidates) // (self.workers * 4)))
        payloads = [
            (
                self.spec.n, self.spec.m, self.base_value, self.witness_mask, self.config,
                candidates[start:start + chunk_size], self._stop_at_first,
            )
            for start in range(0, len(candidates), chunk_size)
        ]
        logger.info(f"Evaluating {len(candidates)} subsets in {len(payloads)} chunks on {self.workers} workers")
        with Pool(processes=min(self.workers, len(payloads))) as pool:
            results = pool.map(_evaluate_chunk, payloads)

        hits = []
        for chunk_hits, examined, dp_calls, prefiltered in results:
            hits.extend(chunk_hits)
            stats.merge(examined, dp_calls, prefiltered)
        return hits

    def _least_witness(self, hits: List[Tuple[IndexSubset, int]]) -> Tuple[IndexSubset, int]:
        if self.mode is SearchMode.FIRST_HIT or not self.use_symmetry:
            return min(hits)
        # Images of a hit are hits with the same raised value.
        best = None
        for subset, raised in hits:
            for image in self.space.orbit(subset):
                if best is None or image < best[0]:
                    best = (image, raised)
        return best

    def search(self, k_max: int) -> BondageResult:
        """
        Search levels 1..k_max.

        Args:
            k_max: Largest subset size to try, at least 1.

        Returns:
            BondageResult: EXACT with the least witness of the minimum
            level, INFINITY when no valid removal can exist, or
            LOWER_BOUND_ONLY when levels 1..k_max hold no hit.
        """
        if k_max < 1:
            raise InvalidInput(f"k_max must be at least 1, got {k_max}")

        stats = SearchStats()
        started = time.perf_counter()
        total_edges = len(self.space.edges)

        def finish(result: BondageResult) -> BondageResult:
            stats.elapsed = time.perf_counter() - started
            result.stats = stats
            result.base_gamma_t = self.base_value
            logger.info(f"Bondage of {self.g.describe()}: {result.status.value} {result} in {stats.elapsed:.2f}s")
            return result

        for k in range(1, min(k_max, total_edges) + 1):
            stats.levels = k
            candidates = self.space.index_subsets(k, self.use_symmetry)
            if self.workers > 1:
                candidates = list(candidates)
                if not candidates:
                    return finish(BondageResult(BondageStatus.INFINITY))
                if len(candidates) >= self.parallel_threshold:
                    hits = self._evaluate_parallel(candidates, stats)
                else:
                    hits = self._evaluate_serial(candidates, stats)
            else:
                before = stats.subsets_examined
                hits = self._evaluate_serial(candidates, stats)
                if stats.subsets_examined == before:
                    logger.info(f"No removable {k}-subsets in {self.g.describe()}")
                    return finish(BondageResult(BondageStatus.INFINITY))

            if hits:
                subset, raised = self._least_witness(hits)
                witness = self.space.to_edges(subset)
                logger.info(f"Level {k}: witness {sorted(e.name for e in witness)} raises gamma_t to {raised}")
                return finish(BondageResult(BondageStatus.EXACT, k, witness, raised_gamma_t=raised))
            logger.info(f"Level {k} exhausted after {stats.subsets_examined} subsets")

        if k_max >= total_edges:
            return finish(BondageResult(BondageStatus.INFINITY))
        return finish(BondageResult(BondageStatus.LOWER_BOUND_ONLY, k_max))


def total_bondage(
    g: GridGraph,
    k_max: int,
    use_symmetry: bool = True,
    mode: SearchMode = SearchMode.CANONICAL,
    config: Optional[Dict[str, Any]] = None,
) -> BondageResult:
    """
    Compute b_t(G) of a clean grid by searching subsets of size <= k_max.

    Raises:
        InvalidInput: For G_{1,1}, a non-clean graph, or k_max < 1.
    """
    return BondageEngine(g, use_symmetry, mode, config).search(k_max)


def verify_witness(g: GridGraph, edges: Iterable[Edge], config: Optional[Dict[str, Any]] = None) -> bool:
    """
    Check that removing edges keeps every vertex covered and raises gamma_t.

    Raises:
        EdgeNotPresent: If an edge is not present in g.
    """
    reduced = g.remove_edges(edges)
    if reduced.has_isolated_vertex():
        return False
    before = gamma_t_dp(g, want_witness=False, config=config)
    if before.is_undefined:
        return False
    after = gamma_t_dp(reduced, want_witness=False, config=config)
    return after.value is not None and after.value > before.value
