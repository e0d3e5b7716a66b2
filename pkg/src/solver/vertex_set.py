"""
Vertex sets, domination predicates and solver result records.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Optional

from ..grid.grid_model import GridGraph, GridSpec, Vertex
from ..utils.errors import InvalidVertex

logger = logging.getLogger(__name__)

UNDEFINED = "undefined"


@dataclass(frozen=True)
class VertexSet:
    """A set of cells of a grid, stored as a bitmask over the cell indices."""

    spec: GridSpec
    mask: int = 0

    @classmethod
    def of(cls, spec: GridSpec, vertices: Iterable[Vertex]) -> "VertexSet":
        """
        Build a vertex set from vertices.

        Raises:
            InvalidVertex: If a vertex lies outside the grid.
        """
        mask = 0
        for v in vertices:
            if not spec.contains(v):
                raise InvalidVertex(f"Vertex {v} is outside G_{{{spec.n},{spec.m}}}")
            mask |= 1 << spec.index(v)
        return cls(spec, mask)

    @classmethod
    def from_names(cls, spec: GridSpec, names: Iterable[str]) -> "VertexSet":
        return cls.of(spec, (Vertex.parse(name) for name in names))

    def vertices(self) -> List[Vertex]:
        """Members in (i, j) lexicographic order."""
        result = []
        mask = self.mask
        index = 0
        while mask:
            if mask & 1:
                result.append(self.spec.vertex_at(index))
            mask >>= 1
            index += 1
        return result

    def names(self) -> List[str]:
        return [v.name for v in self.vertices()]

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.vertices())

    def __contains__(self, v: Vertex) -> bool:
        return self.spec.contains(v) and bool((self.mask >> self.spec.index(v)) & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.spec, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.spec, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.spec, self.mask & ~other.mask)

    def restrict_columns(self, last_column: int) -> "VertexSet":
        """Members with i <= last_column, as a set of G_{last_column, m}."""
        spec = GridSpec(last_column, self.spec.m)
        keep = self.mask & ((1 << (last_column * self.spec.m)) - 1)
        return VertexSet(spec, keep)

    def __str__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


@dataclass(frozen=True)
class GammaResult:
    """
    A domination number: a natural number, or undefined (value None).

    When a witness is present it is a (total) dominating set of exactly
    `value` vertices.
    """

    value: Optional[int]
    witness: Optional[VertexSet] = None

    @property
    def is_undefined(self) -> bool:
        return self.value is None

    @classmethod
    def undefined(cls) -> "GammaResult":
        return cls(None, None)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": UNDEFINED if self.value is None else self.value,
            "witness": self.witness.names() if self.witness is not None else None,
        }

    @classmethod
    def from_dict(cls, spec: GridSpec, data: Dict[str, Any]) -> "GammaResult":
        value = data.get("value")
        if value == UNDEFINED:
            return cls.undefined()
        names = data.get("witness")
        witness = VertexSet.from_names(spec, names) if names is not None else None
        return cls(value, witness)

    def __str__(self) -> str:
        return UNDEFINED if self.value is None else str(self.value)


@dataclass(frozen=True)
class Enumeration:
    """All minimum total dominating sets, possibly cut off at a limit."""

    sets: List[VertexSet] = field(default_factory=list)
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.sets)


def is_dominating(g: GridGraph, d: VertexSet) -> bool:
    """
    Check ordinary domination: every live vertex outside D has a neighbour in D.

    Args:
        g: The graph.
        d: Candidate set, a subset of the live vertices.

    Returns:
        bool: True iff D dominates g.
    """
    return is_dominating_mask(g, d.mask)


def is_total_dominating(g: GridGraph, d: VertexSet) -> bool:
    """
    Check total domination: every live vertex, members of D included, has a
    neighbour in D.
    """
    return is_total_dominating_mask(g, d.mask)


def neighborhood_union(g: GridGraph, mask: int) -> int:
    """Union of the open neighbourhoods of the members of mask."""
    adjacency = g.adjacency
    covered = 0
    while mask:
        low = mask & -mask
        covered |= adjacency[low.bit_length() - 1]
        mask ^= low
    return covered


def is_dominating_mask(g: GridGraph, mask: int) -> bool:
    return g.live_mask & ~(mask | neighborhood_union(g, mask)) == 0


def is_total_dominating_mask(g: GridGraph, mask: int) -> bool:
    return g.live_mask & ~neighborhood_union(g, mask) == 0
