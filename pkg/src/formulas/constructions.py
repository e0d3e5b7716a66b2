"""
Explicit minimum total dominating sets used by the bondage arguments.

Each ConstructionId names one family. construct() builds the vertex set
and construction_graph() the graph it is meant to totally dominate: the
clean G_{n,4} for the four-row families, or G_{n,2} with the named edges
removed for the two-row families.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional

from ..grid.grid_model import Edge, GridGraph, GridSpec, Vertex, build_grid
from ..solver.vertex_set import VertexSet
from ..utils.errors import InvalidInput

logger = logging.getLogger(__name__)


class ConstructionId(Enum):
    """Named vertex-set families."""

    LADDER_VERTICAL = "ladder-vertical"
    LADDER_HORIZONTAL = "ladder-horizontal"
    LADDER_HORIZONTAL_SPLIT = "ladder-horizontal-split"
    LADDER_TWO_VERTICAL = "ladder-two-vertical"
    STRIPE_D = "stripe-d"
    STRIPE_DPRIME = "stripe-dprime"
    ZIGZAG_D = "zigzag-d"
    ZIGZAG_DPRIME = "zigzag-dprime"

    @property
    def rows(self) -> int:
        return 4 if self.value.startswith(("stripe", "zigzag")) else 2


@dataclass(frozen=True)
class ConstructionParams:
    """
    Family parameters.

    i is the column of the removed edge; j is the second column for the
    two-vertical-edge family; row is the row of a removed horizontal edge.
    """

    i: Optional[int] = None
    j: Optional[int] = None
    row: int = 1


def _columns(n: int, residue: int) -> List[int]:
    return [k for k in range(1, n + 1) if k % 3 == residue]


def _full_columns(columns: Iterable[int]) -> List[Vertex]:
    return [Vertex(k, l) for k in columns for l in (1, 2)]


def _ladder_block(first: int, last: int) -> List[int]:
    """Columns of the canonical minimum set of the two-row block first..last."""
    size = last - first + 1
    if size <= 0:
        return []
    picked = [first + offset - 1 for offset in range(1, size + 1) if offset % 3 == 2]
    if size % 3 == 1:
        picked.append(last)
    return picked


def _require(condition: bool, message: str):
    if not condition:
        raise InvalidInput(message)


def _check_params(cid: ConstructionId, n: int, params: ConstructionParams):
    if cid.rows == 4:
        _require(n % 5 == 4, f"{cid.value} requires n = 4 (mod 5), got n={n}")
        return

    if cid is ConstructionId.LADDER_TWO_VERTICAL:
        _require(n % 3 == 1 and n >= 4, f"{cid.value} requires n = 1 (mod 3), n >= 4, got n={n}")
        _require(
            params.i is not None and params.j is not None and 1 <= params.i < params.j <= n,
            f"{cid.value} requires columns 1 <= i < j <= {n}",
        )
        return

    _require(n % 3 == 2, f"{cid.value} requires n = 2 (mod 3), got n={n}")
    _require(params.i is not None, f"{cid.value} requires the column i")
    if cid is ConstructionId.LADDER_VERTICAL:
        _require(1 <= params.i <= n, f"Column {params.i} is outside [1, {n}]")
        return
    _require(1 <= params.i <= n - 1, f"Column {params.i} is outside [1, {n - 1}]")
    _require(params.row in (1, 2), f"Row {params.row} is outside [1, 2]")
    if cid is ConstructionId.LADDER_HORIZONTAL_SPLIT:
        _require(params.i % 3 == 1, f"{cid.value} requires i = 1 (mod 3), got i={params.i}")
    else:
        _require(params.i % 3 != 1, f"{cid.value} requires i != 1 (mod 3), got i={params.i}")


def construction_edges(cid: ConstructionId, n: int, params: ConstructionParams) -> List[Edge]:
    """Edges removed from the base grid for the given family."""
    if cid.rows == 4:
        return []
    if cid is ConstructionId.LADDER_VERTICAL:
        return [Edge.vertical(params.i, 1)]
    if cid is ConstructionId.LADDER_TWO_VERTICAL:
        return [Edge.vertical(params.i, 1), Edge.vertical(params.j, 1)]
    return [Edge.horizontal(params.i, params.row)]


def construction_graph(cid: ConstructionId, n: int, params: Optional[ConstructionParams] = None) -> GridGraph:
    """
    The graph a construction totally dominates.

    Raises:
        InvalidInput: If n or params violate the family's conditions.
    """
    params = params or ConstructionParams()
    _check_params(cid, n, params)
    return build_grid(GridSpec(n, cid.rows)).remove_edges(construction_edges(cid, n, params))


def _stripe(n: int, prime: bool) -> List[Vertex]:
    vertices = []
    if not prime:
        for i in range(1, n - 2):
            if i % 5 == 1:
                vertices += [Vertex(i, 2), Vertex(i, 3), Vertex(i + 2, 1), Vertex(i + 3, 1),
                             Vertex(i + 2, 4), Vertex(i + 3, 4)]
    else:
        for i in range(4, n + 1):
            if i % 5 == 4:
                vertices += [Vertex(i, 2), Vertex(i, 3), Vertex(i - 3, 1), Vertex(i - 2, 1),
                             Vertex(i - 3, 4), Vertex(i - 2, 4)]
    return vertices


def _zigzag_block(start: int, low: bool) -> List[Vertex]:
    # Pair of cells at both ends of the block on one side, middle pair on the other.
    ends, middle = ((1, 2), 4) if low else ((3, 4), 1)
    cells = [Vertex(start, r) for r in ends] + [Vertex(start + 3, r) for r in ends]
    return cells + [Vertex(start + 1, middle), Vertex(start + 2, middle)]


def _zigzag(n: int, prime: bool) -> List[Vertex]:
    vertices = []
    for start in range(1, n - 2):
        if start % 10 == 1:
            vertices += _zigzag_block(start, low=not prime)
        elif start % 10 == 6:
            vertices += _zigzag_block(start, low=prime)
    return vertices


def construct(cid: ConstructionId, n: int, params: Optional[ConstructionParams] = None) -> VertexSet:
    """
    Build the vertex set of a construction family.

    Args:
        cid: The family.
        n: Number of columns.
        params: Column and row parameters for the two-row families.

    Returns:
        VertexSet: A set over G_{n,2} or G_{n,4}.

    Raises:
        InvalidInput: If n or params violate the family's conditions.
    """
    params = params or ConstructionParams()
    _check_params(cid, n, params)
    spec = GridSpec(n, cid.rows)

    if cid is ConstructionId.STRIPE_D:
        vertices = _stripe(n, prime=False)
    elif cid is ConstructionId.STRIPE_DPRIME:
        vertices = _stripe(n, prime=True)
    elif cid is ConstructionId.ZIGZAG_D:
        vertices = _zigzag(n, prime=False)
    elif cid is ConstructionId.ZIGZAG_DPRIME:
        vertices = _zigzag(n, prime=True)
    elif cid is ConstructionId.LADDER_VERTICAL:
        residue = 1 if params.i % 3 == 2 else 2
        vertices = _full_columns(_columns(n, residue))
    elif cid is ConstructionId.LADDER_HORIZONTAL:
        residue = 2 if params.i % 3 == 0 else 1
        vertices = _full_columns(_columns(n, residue))
    elif cid is ConstructionId.LADDER_HORIZONTAL_SPLIT:
        i = params.i
        other = 3 - params.row
        columns = _ladder_block(1, i - 1) + _ladder_block(i + 2, n)
        vertices = _full_columns(columns) + [Vertex(i, other), Vertex(i + 1, other)]
    else:
        i, j = params.i, params.j
        if i % 3 != 1 and j % 3 != 1:
            vertices = _full_columns(_columns(n, 1))
        elif i % 3 != 2 and j % 3 != 2:
            vertices = _full_columns(_columns(n, 2) + [n - 1])
        else:
            vertices = _full_columns(_columns(n, 0) + [2])

    result = VertexSet.of(spec, vertices)
    logger.debug(f"Construction {cid.value} for n={n}: {len(result)} vertices")
    return result
