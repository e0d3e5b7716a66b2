"""
Grid graphs G_{n,m} = P_n x P_m with edge removals and vertex deletions.

This module provides the coordinate types (Vertex, Edge, GridSpec) and the
immutable GridGraph every solver runs on. Coordinates are 1-based: vertex
x_{ij} has column i in [1, n] and row j in [1, m]. Internally each cell has a
bit index (i-1)*m + (j-1), so vertex sets are plain Python ints and the
index order is the (i, j) lexicographic order.
"""

import re
import logging
from dataclasses import dataclass, field
from enum import IntEnum
from typing import FrozenSet, Iterable, List, Set, Tuple

from ..utils.errors import (
    InvalidVertex, InvalidColumn, EdgeNotPresent, InvalidInput, ParseError
)

logger = logging.getLogger(__name__)

_VERTEX_PATTERN = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")
_EDGE_PATTERN = re.compile(r"^\s*([HVhv])\s*:\s*(\d+)\s*,\s*(\d+)\s*$")


class EdgeKind(IntEnum):
    """Edge classification; the enum order is the canonical kind order."""

    HORIZONTAL = 0
    VERTICAL = 1

    @property
    def prefix(self) -> str:
        return "H" if self is EdgeKind.HORIZONTAL else "V"


@dataclass(frozen=True, order=True)
class Vertex:
    """A grid cell x_{ij}."""

    i: int
    j: int

    @property
    def name(self) -> str:
        return f"{self.i},{self.j}"

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        """
        Parse a canonical vertex name such as "3,2".

        Raises:
            ParseError: If the text is not of the form "i,j".
        """
        match = _VERTEX_PATTERN.match(text)
        if not match:
            raise ParseError(f"Invalid vertex name: {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Edge:
    """
    A grid edge.

    Horizontal(i, j) joins x_{ij} and x_{(i+1)j}; Vertical(i, j) joins
    x_{ij} and x_{i(j+1)}. Dataclass ordering gives the canonical order:
    kind first (Horizontal < Vertical), then i, then j.
    """

    kind: EdgeKind
    i: int
    j: int

    @classmethod
    def horizontal(cls, i: int, j: int) -> "Edge":
        return cls(EdgeKind.HORIZONTAL, i, j)

    @classmethod
    def vertical(cls, i: int, j: int) -> "Edge":
        return cls(EdgeKind.VERTICAL, i, j)

    @classmethod
    def between(cls, u: Vertex, v: Vertex) -> "Edge":
        """
        Build the edge joining two grid-adjacent cells.

        Raises:
            InvalidInput: If u and v are not adjacent in the full grid.
        """
        if u.j == v.j and abs(u.i - v.i) == 1:
            return cls(EdgeKind.HORIZONTAL, min(u.i, v.i), u.j)
        if u.i == v.i and abs(u.j - v.j) == 1:
            return cls(EdgeKind.VERTICAL, u.i, min(u.j, v.j))
        raise InvalidInput(f"Vertices {u} and {v} are not grid-adjacent")

    def endpoints(self) -> Tuple[Vertex, Vertex]:
        if self.kind is EdgeKind.HORIZONTAL:
            return Vertex(self.i, self.j), Vertex(self.i + 1, self.j)
        return Vertex(self.i, self.j), Vertex(self.i, self.j + 1)

    @property
    def name(self) -> str:
        return f"{self.kind.prefix}:{self.i},{self.j}"

    @classmethod
    def parse(cls, text: str) -> "Edge":
        """
        Parse a canonical edge name such as "H:5,1" or "V:2,3".

        Raises:
            ParseError: If the text is not of the form "H:i,j" or "V:i,j".
        """
        match = _EDGE_PATTERN.match(text)
        if not match:
            raise ParseError(f"Invalid edge name: {text!r}")
        kind = EdgeKind.HORIZONTAL if match.group(1).upper() == "H" else EdgeKind.VERTICAL
        return cls(kind, int(match.group(2)), int(match.group(3)))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class GridSpec:
    """Grid dimensions: n columns (the P_n factor) and m rows (the P_m factor)."""

    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise InvalidInput(f"Grid dimensions must be integers, got ({self.n!r}, {self.m!r})")
        if self.n < 1 or self.m < 1:
            raise InvalidInput(f"Grid dimensions must be positive, got ({self.n}, {self.m})")

    @property
    def vertex_count(self) -> int:
        return self.n * self.m

    @property
    def horizontal_edge_count(self) -> int:
        return (self.n - 1) * self.m

    @property
    def vertical_edge_count(self) -> int:
        return self.n * (self.m - 1)

    @property
    def edge_count(self) -> int:
        return self.horizontal_edge_count + self.vertical_edge_count

    def contains(self, v: Vertex) -> bool:
        return 1 <= v.i <= self.n and 1 <= v.j <= self.m

    def is_valid_edge(self, e: Edge) -> bool:
        if e.kind is EdgeKind.HORIZONTAL:
            return 1 <= e.i <= self.n - 1 and 1 <= e.j <= self.m
        return 1 <= e.i <= self.n and 1 <= e.j <= self.m - 1

    def index(self, v: Vertex) -> int:
        """Bit index of a cell; (i, j) lexicographic order."""
        return (v.i - 1) * self.m + (v.j - 1)

    def vertex_at(self, index: int) -> Vertex:
        return Vertex(index // self.m + 1, index % self.m + 1)

    def vertices(self) -> List[Vertex]:
        return [Vertex(i, j) for i in range(1, self.n + 1) for j in range(1, self.m + 1)]

    def edges(self) -> List[Edge]:
        """All edges of the clean grid in canonical order."""
        horizontal = [
            Edge(EdgeKind.HORIZONTAL, i, j)
            for i in range(1, self.n)
            for j in range(1, self.m + 1)
        ]
        vertical = [
            Edge(EdgeKind.VERTICAL, i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.m)
        ]
        return horizontal + vertical

    def transposed(self) -> "GridSpec":
        return GridSpec(self.m, self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1


def transpose_vertex(v: Vertex) -> Vertex:
    return Vertex(v.j, v.i)


def transpose_edge(e: Edge) -> Edge:
    """Map an edge of G_{n,m} to the corresponding edge of G_{m,n}."""
    if e.kind is EdgeKind.HORIZONTAL:
        return Edge(EdgeKind.VERTICAL, e.j, e.i)
    return Edge(EdgeKind.HORIZONTAL, e.j, e.i)


@dataclass(frozen=True)
class GridGraph:
    """
    An immutable grid graph with removed edges and deleted vertices.

    Deleted vertices are a mask over the full grid, so column sets Y_i and
    edge names keep their original coordinates. Removed edges are never
    incident to deleted vertices; such removals are absorbed into the
    deletion.
    """

    spec: GridSpec
    removed_edges: FrozenSet[Edge] = frozenset()
    deleted_vertices: FrozenSet[Vertex] = frozenset()
    _adjacency: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _live_mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "removed_edges", frozenset(self.removed_edges))
        object.__setattr__(self, "deleted_vertices", frozenset(self.deleted_vertices))

        for v in self.deleted_vertices:
            if not self.spec.contains(v):
                raise InvalidVertex(f"Vertex {v} is outside G_{{{self.spec.n},{self.spec.m}}}")
        for e in self.removed_edges:
            if not self.spec.is_valid_edge(e):
                raise EdgeNotPresent(f"Edge {e} is not an edge of G_{{{self.spec.n},{self.spec.m}}}")
            u, v = e.endpoints()
            if u in self.deleted_vertices or v in self.deleted_vertices:
                raise InvalidInput(f"Removed edge {e} is incident to a deleted vertex")

        spec = self.spec
        live_mask = spec.full_mask
        for v in self.deleted_vertices:
            live_mask &= ~(1 << spec.index(v))

        adjacency = [0] * spec.vertex_count
        for e in spec.edges():
            if e in self.removed_edges:
                continue
            u, v = e.endpoints()
            a, b = spec.index(u), spec.index(v)
            if not (live_mask >> a) & 1 or not (live_mask >> b) & 1:
                continue
            adjacency[a] |= 1 << b
            adjacency[b] |= 1 << a

        object.__setattr__(self, "_adjacency", tuple(adjacency))
        object.__setattr__(self, "_live_mask", live_mask)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def live_mask(self) -> int:
        return self._live_mask

    @property
    def live_count(self) -> int:
        return self._live_mask.bit_count()

    @property
    def is_clean(self) -> bool:
        return not self.removed_edges and not self.deleted_vertices

    def is_live(self, v: Vertex) -> bool:
        return self.spec.contains(v) and v not in self.deleted_vertices

    def live_vertices(self) -> List[Vertex]:
        return [v for v in self.spec.vertices() if v not in self.deleted_vertices]

    def neighbor_mask(self, index: int) -> int:
        """Open-neighbourhood bitmask of the cell with the given bit index."""
        return self._adjacency[index]

    @property
    def adjacency(self) -> Tuple[int, ...]:
        return self._adjacency

    def _check_live(self, v: Vertex):
        if not self.spec.contains(v):
            raise InvalidVertex(f"Vertex {v} is outside G_{{{self.n},{self.m}}}")
        if v in self.deleted_vertices:
            raise InvalidVertex(f"Vertex {v} has been deleted")

    def neighbors(self, v: Vertex) -> Set[Vertex]:
        """
        Get the live neighbours of a vertex through non-removed edges.

        Raises:
            InvalidVertex: If v is out of range or deleted.
        """
        self._check_live(v)
        return set(self.vertices_of(self._adjacency[self.spec.index(v)]))

    def degree(self, v: Vertex) -> int:
        self._check_live(v)
        return self._adjacency[self.spec.index(v)].bit_count()

    def has_edge(self, e: Edge) -> bool:
        """True iff e is a present edge: valid, not removed, both ends live."""
        if not self.spec.is_valid_edge(e) or e in self.removed_edges:
            return False
        u, v = e.endpoints()
        return u not in self.deleted_vertices and v not in self.deleted_vertices

    def present_edges(self) -> List[Edge]:
        return [e for e in self.spec.edges() if self.has_edge(e)]

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self._adjacency) // 2

    def column(self, i: int) -> Set[Vertex]:
        """
        Get the vertical vertex set Y_i minus deleted vertices.

        Raises:
            InvalidColumn: If i is outside [1, n].
        """
        if not 1 <= i <= self.n:
            raise InvalidColumn(f"Column {i} is outside [1, {self.n}]")
        return {Vertex(i, j) for j in range(1, self.m + 1) if Vertex(i, j) not in self.deleted_vertices}

    def column_mask(self, i: int) -> int:
        mask = 0
        for v in self.column(i):
            mask |= 1 << self.spec.index(v)
        return mask

    def has_isolated_vertex(self) -> bool:
        """True iff some live vertex has no live neighbour."""
        live = self._live_mask
        index = 0
        while live:
            if live & 1 and not self._adjacency[index]:
                return True
            live >>= 1
            index += 1
        return False

    # ------------------------------------------------------------------
    # Vertex set conversions
    # ------------------------------------------------------------------

    def mask_of(self, vertices: Iterable[Vertex]) -> int:
        mask = 0
        for v in vertices:
            if not self.spec.contains(v):
                raise InvalidVertex(f"Vertex {v} is outside G_{{{self.n},{self.m}}}")
            mask |= 1 << self.spec.index(v)
        return mask

    def vertices_of(self, mask: int) -> List[Vertex]:
        result = []
        index = 0
        while mask:
            if mask & 1:
                result.append(self.spec.vertex_at(index))
            mask >>= 1
            index += 1
        return result

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def remove_edges(self, edges: Iterable[Edge]) -> "GridGraph":
        """
        Return a new graph with the given edges removed.

        Raises:
            EdgeNotPresent: If an edge is invalid, already removed, or
                incident to a deleted vertex.
        """
        edges = frozenset(edges)
        for e in sorted(edges):
            if not self.has_edge(e):
                raise EdgeNotPresent(f"Edge {e} is not present in the graph")
        if not edges:
            return self
        return GridGraph(self.spec, self.removed_edges | edges, self.deleted_vertices)

    def delete_vertices(self, vertices: Iterable[Vertex]) -> "GridGraph":
        """
        Return a new graph with the given vertices and their edges removed.

        Raises:
            InvalidVertex: If a vertex is out of range or already deleted.
        """
        vertices = frozenset(vertices)
        for v in sorted(vertices):
            self._check_live(v)
        if not vertices:
            return self
        removed = frozenset(
            e for e in self.removed_edges
            if not any(end in vertices for end in e.endpoints())
        )
        return GridGraph(self.spec, removed, self.deleted_vertices | vertices)

    def delete_columns(self, columns: Iterable[int]) -> "GridGraph":
        """Delete every live vertex of the given columns."""
        doomed: Set[Vertex] = set()
        for i in columns:
            doomed |= self.column(i)
        return self.delete_vertices(doomed)

    def transposed(self) -> "GridGraph":
        """The same graph seen as a subgraph of G_{m,n}."""
        return GridGraph(
            self.spec.transposed(),
            frozenset(transpose_edge(e) for e in self.removed_edges),
            frozenset(transpose_vertex(v) for v in self.deleted_vertices),
        )

    def to_networkx(self):
        """Export the live graph as a networkx.Graph keyed by (i, j) tuples."""
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from((v.i, v.j) for v in self.live_vertices())
        for e in self.present_edges():
            u, v = e.endpoints()
            graph.add_edge((u.i, u.j), (v.i, v.j))
        return graph

    def is_isomorphic_to(self, other: "GridGraph") -> bool:
        """Whether the live graphs are isomorphic, ignoring coordinates."""
        import networkx as nx

        if self.live_count != other.live_count or self.edge_count != other.edge_count:
            return False
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx())

    def describe(self) -> str:
        parts = [f"G_{{{self.n},{self.m}}}"]
        if self.removed_edges:
            parts.append("- {" + ", ".join(e.name for e in sorted(self.removed_edges)) + "}")
        if self.deleted_vertices:
            parts.append("- [" + ", ".join(v.name for v in sorted(self.deleted_vertices)) + "]")
        return " ".join(parts)


def build_grid(spec: GridSpec) -> GridGraph:
    """
    Build the full grid G_{n,m}.

    Args:
        spec: The grid dimensions.

    Returns:
        GridGraph: The clean grid with nothing removed or deleted.
    """
    return GridGraph(spec)


def parse_edges(names: Iterable[str]) -> List[Edge]:
    return [Edge.parse(name) for name in names if name.strip()]


def parse_vertices(names: Iterable[str]) -> List[Vertex]:
    return [Vertex.parse(name) for name in names if name.strip()]
