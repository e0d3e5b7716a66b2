"""
Column-profile dynamic program for the total domination number.

Columns are processed left to right. The profile after column i records,
per row, whether the cell is chosen and whether it is already satisfied
by a chosen neighbour in columns 1..i. A cell of column i that is still
unsatisfied when column i+1 is placed must be satisfied by its right
neighbour, so the next selection is forced to contain it. Terminal
profiles are accepted only if every cell of the last column is satisfied.

Removed edges and deleted vertices are folded into per-column masks:
vertical removals block the transfer inside a column, horizontal removals
block both transfers across a column boundary, and deleted cells are never
chosen and count as satisfied.
"""

import logging
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple

from ..grid.grid_model import GridGraph, GridSpec
from ..utils.config import DEFAULT_CONFIG
from ..utils.errors import InvalidInput, TooLarge
from .vertex_set import GammaResult, VertexSet

logger = logging.getLogger(__name__)

_INF = float("inf")


class DpProfile(NamedTuple):
    """Frontier state: chosen and satisfied row masks of the current column."""

    chosen: int
    satisfied: int


class ProfileDP:
    """
    Profile DP over the columns of one grid graph.

    Row masks are m-bit ints, bit j-1 standing for row j. The solver works
    on the graph as given; callers transpose beforehand so that m is the
    short side.
    """

    def __init__(self, g: GridGraph, required_mask: int = 0, forbidden_mask: int = 0):
        """
        Precompute the per-column masks.

        Args:
            g: The graph to solve.
            required_mask: Cells every candidate set must contain.
            forbidden_mask: Cells no candidate set may contain.
        """
        self.g = g
        self.n = g.n
        self.m = g.m
        self.full = (1 << self.m) - 1
        self.start = DpProfile(0, self.full)

        self.alive: List[int] = []
        self.dead: List[int] = []
        self.allowed: List[int] = []
        self.forced: List[int] = []
        self.vertical: List[int] = []
        self.horizontal: List[int] = []

        adjacency = g.adjacency
        for c in range(self.n):
            offset = c * self.m
            alive = (g.live_mask >> offset) & self.full
            forced = (required_mask >> offset) & self.full
            forbidden = (forbidden_mask >> offset) & self.full
            vertical = 0
            horizontal = 0
            for r in range(self.m):
                idx = offset + r
                if r + 1 < self.m and (adjacency[idx] >> (idx + 1)) & 1:
                    vertical |= 1 << r
                if c + 1 < self.n and (adjacency[idx] >> (idx + self.m)) & 1:
                    horizontal |= 1 << r
            self.alive.append(alive)
            self.dead.append(self.full & ~alive)
            self.allowed.append(alive & ~forbidden)
            self.forced.append(forced)
            self.vertical.append(vertical)
            self.horizontal.append(horizontal)

        self.states_visited = 0

    def _within(self, c: int, chosen: int) -> int:
        """Cells of column c satisfied by chosen cells of the same column."""
        vertical = self.vertical[c]
        return ((chosen & vertical) << 1) | ((chosen >> 1) & vertical)

    def _signature(self, c: int, state: DpProfile) -> Optional[Tuple[int, int]]:
        """
        Reduce the profile left of column c to what column c depends on.

        Returns:
            (need, carry): cells of column c-1 that column c must satisfy
            and cells of column c satisfied from the left; None for a dead
            state whose pending cells have no right edge.
        """
        if c == 0:
            return 0, 0
        need = self.alive[c - 1] & ~state.satisfied & self.full
        horizontal = self.horizontal[c - 1]
        if need & ~horizontal:
            return None
        return need, state.chosen & horizontal

    def _expand(self, c: int, signature: Tuple[int, int]) -> Iterator[DpProfile]:
        need, carry = signature
        base = need | self.forced[c]
        if base & ~self.allowed[c]:
            return
        free = self.allowed[c] & ~base
        fixed = carry | self.dead[c]
        sub = free
        while True:
            chosen = base | sub
            yield DpProfile(chosen, self._within(c, chosen) | fixed)
            if not sub:
                break
            sub = (sub - 1) & free

    def _step(self, c: int, layer: Dict[DpProfile, int]) -> Dict[DpProfile, int]:
        grouped: Dict[Tuple[int, int], int] = {}
        for state, cost in layer.items():
            signature = self._signature(c, state)
            if signature is None:
                continue
            if cost < grouped.get(signature, _INF):
                grouped[signature] = cost

        following: Dict[DpProfile, int] = {}
        for signature, cost in grouped.items():
            for succ in self._expand(c, signature):
                total = cost + succ.chosen.bit_count()
                if total < following.get(succ, _INF):
                    following[succ] = total
        self.states_visited += len(following)
        return following

    def _accepting(self, layer: Dict[DpProfile, int]) -> Optional[int]:
        costs = [cost for state, cost in layer.items() if state.satisfied == self.full]
        return min(costs) if costs else None

    def value(self) -> Optional[int]:
        """Minimum size only, keeping a single layer in memory."""
        layer = {self.start: 0}
        for c in range(self.n):
            layer = self._step(c, layer)
            if not layer:
                return None
        return self._accepting(layer)

    def _row_key(self, chosen: int) -> int:
        # Lower rows first: the lexicographically smaller column selection
        # has the larger bit-reversed value.
        return int(format(chosen, f"0{self.m}b")[::-1], 2)

    def solve(self) -> Tuple[Optional[int], Optional[int]]:
        """
        Minimum size and the lexicographically least minimum set.

        Returns:
            (value, mask): both None when no admissible set exists.
        """
        layers: List[Dict[DpProfile, int]] = []
        layer = {self.start: 0}
        for c in range(self.n):
            layer = self._step(c, layer)
            if not layer:
                return None, None
            layers.append(layer)

        # Cost-to-go per reachable profile, right to left.
        to_go: List[Dict[DpProfile, int]] = [dict() for _ in range(self.n)]
        to_go[-1] = {s: 0 for s in layers[-1] if s.satisfied == self.full}
        if not to_go[-1]:
            return None, None
        for c in range(self.n - 2, -1, -1):
            ahead = to_go[c + 1]
            cache: Dict[Tuple[int, int], float] = {}
            current: Dict[DpProfile, int] = {}
            for state in layers[c]:
                signature = self._signature(c + 1, state)
                if signature is None:
                    continue
                if signature not in cache:
                    best = _INF
                    for succ in self._expand(c + 1, signature):
                        rest = ahead.get(succ)
                        if rest is not None:
                            best = min(best, succ.chosen.bit_count() + rest)
                    cache[signature] = best
                if cache[signature] < _INF:
                    current[state] = int(cache[signature])
            to_go[c] = current

        opt = min(cost + to_go[0][s] for s, cost in layers[0].items() if s in to_go[0])

        mask = 0
        remaining = opt
        state = self.start
        for c in range(self.n):
            best: Optional[DpProfile] = None
            for succ in self._expand(c, self._signature(c, state)):
                rest = to_go[c].get(succ)
                if rest is None or succ.chosen.bit_count() + rest != remaining:
                    continue
                if best is None or self._row_key(succ.chosen) > self._row_key(best.chosen):
                    best = succ
            mask |= best.chosen << (c * self.m)
            remaining -= best.chosen.bit_count()
            state = best

        logger.debug(f"Profile DP on {self.g.describe()}: {self.states_visited} states")
        return opt, mask


def _transpose_mask(spec: GridSpec, mask: int) -> int:
    """Map a cell mask of G_{n,m} onto G_{m,n}."""
    target = spec.transposed()
    result = 0
    index = 0
    while mask:
        if mask & 1:
            v = spec.vertex_at(index)
            result |= 1 << ((v.j - 1) * target.m + (v.i - 1))
        mask >>= 1
        index += 1
    return result


def gamma_t_dp(
    g: GridGraph,
    required: Optional[VertexSet] = None,
    forbidden: Optional[VertexSet] = None,
    want_witness: bool = True,
    config: Optional[Dict[str, Any]] = None,
) -> GammaResult:
    """
    Compute gamma_t(G) with the profile DP.

    The witness is the lexicographically least minimum total dominating set
    in (i, j) order. Grids with m > n are solved transposed; the witness is
    then fixed vertex by vertex in the original order with forced
    inclusion, one value-only run per undecided vertex.

    Args:
        g: The graph; edge removals and vertex deletions are allowed.
        required: Vertices every candidate set must contain.
        forbidden: Vertices no candidate set may contain.
        want_witness: Skip reconstruction when False.
        config: Optional configuration dict (reads "dp_max_rows").

    Returns:
        GammaResult: Undefined on an empty graph, an isolated vertex, or
        contradictory constraints.

    Raises:
        TooLarge: If min(n, m) exceeds config["dp_max_rows"].
        InvalidInput: If required contains a vertex that is not live.
    """
    max_rows = (config or {}).get("dp_max_rows", DEFAULT_CONFIG["dp_max_rows"])
    required_mask = required.mask if required is not None else 0
    forbidden_mask = forbidden.mask if forbidden is not None else 0
    if required_mask & ~g.live_mask:
        raise InvalidInput("Required vertices must be live vertices of the graph")

    short_side = min(g.n, g.m)
    if short_side > max_rows:
        raise TooLarge(f"Profile DP supports at most {max_rows} rows, {g.describe()} needs {short_side}")

    if g.live_count == 0 or g.has_isolated_vertex() or required_mask & forbidden_mask:
        return GammaResult.undefined()

    if g.m <= g.n:
        solver = ProfileDP(g, required_mask, forbidden_mask)
        if not want_witness:
            value = solver.value()
            return GammaResult(value) if value is not None else GammaResult.undefined()
        value, mask = solver.solve()
        if value is None:
            return GammaResult.undefined()
        return GammaResult(value, VertexSet(g.spec, mask))

    t = g.transposed()

    def run(req: int, forb: int) -> Optional[int]:
        return ProfileDP(t, _transpose_mask(g.spec, req), _transpose_mask(g.spec, forb)).value()

    value = run(required_mask, forbidden_mask)
    if value is None:
        return GammaResult.undefined()
    if not want_witness:
        return GammaResult(value)

    chosen = required_mask
    excluded = forbidden_mask
    for index in range(g.spec.vertex_count):
        if chosen.bit_count() == value:
            break
        bit = 1 << index
        if not g.live_mask & bit or (chosen | excluded) & bit:
            continue
        if run(chosen | bit, excluded) == value:
            chosen |= bit
        else:
            excluded |= bit

    return GammaResult(value, VertexSet(g.spec, chosen))
