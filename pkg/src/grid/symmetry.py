"""
Automorphisms of the clean grid.

A SymmetryMap flips the column index, the row index, or both, and then
optionally transposes (square grids only). The four flips form the
automorphism group of a rectangle; with transposes the group of a square
has order 8.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Tuple, Union

from .grid_model import Edge, GridSpec, Vertex
from ..utils.errors import InvalidSymmetry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymmetryMap:
    """A grid automorphism: flip i, flip j, then transpose."""

    flip_i: bool = False
    flip_j: bool = False
    transpose: bool = False

    @property
    def is_identity(self) -> bool:
        return not (self.flip_i or self.flip_j or self.transpose)

    def _check(self, spec: GridSpec):
        if self.transpose and spec.n != spec.m:
            raise InvalidSymmetry(
                f"Transpose is only an automorphism of square grids, got ({spec.n}, {spec.m})"
            )

    def apply_vertex(self, spec: GridSpec, v: Vertex) -> Vertex:
        self._check(spec)
        i = spec.n + 1 - v.i if self.flip_i else v.i
        j = spec.m + 1 - v.j if self.flip_j else v.j
        return Vertex(j, i) if self.transpose else Vertex(i, j)

    def apply_edge(self, spec: GridSpec, e: Edge) -> Edge:
        u, v = e.endpoints()
        return Edge.between(self.apply_vertex(spec, u), self.apply_vertex(spec, v))

    def apply(self, spec: GridSpec, item: Union[Vertex, Edge]) -> Union[Vertex, Edge]:
        """
        Apply the map to a vertex or an edge of the clean grid.

        Raises:
            InvalidSymmetry: If the map transposes a non-square grid.
        """
        if isinstance(item, Edge):
            return self.apply_edge(spec, item)
        return self.apply_vertex(spec, item)

    def apply_edges(self, spec: GridSpec, edges: Iterable[Edge]) -> FrozenSet[Edge]:
        return frozenset(self.apply_edge(spec, e) for e in edges)

    def compose(self, other: "SymmetryMap") -> "SymmetryMap":
        """
        The map "apply self, then other".

        A flip performed after a transpose equals the opposite-axis flip
        performed before it.
        """
        if self.transpose:
            later_i, later_j = other.flip_j, other.flip_i
        else:
            later_i, later_j = other.flip_i, other.flip_j
        return SymmetryMap(
            flip_i=self.flip_i != later_i,
            flip_j=self.flip_j != later_j,
            transpose=self.transpose != other.transpose,
        )


def symmetries(spec: GridSpec) -> List[SymmetryMap]:
    """
    Get the full automorphism group of the clean grid, identity first.

    Args:
        spec: The grid dimensions.

    Returns:
        List[SymmetryMap]: 4 maps for a rectangle, 8 for a square.
    """
    transposes = (False, True) if spec.n == spec.m else (False,)
    return [
        SymmetryMap(flip_i, flip_j, transpose)
        for transpose in transposes
        for flip_i in (False, True)
        for flip_j in (False, True)
    ]


@lru_cache(maxsize=256)
def edge_permutations(spec: GridSpec) -> Tuple[Tuple[int, ...], ...]:
    """
    Edge-index permutations for every symmetry of the grid.

    Entry k of the result maps the canonical index of an edge to the
    canonical index of its image under symmetries(spec)[k].
    """
    edges = spec.edges()
    position = {e: idx for idx, e in enumerate(edges)}
    perms = []
    for sym in symmetries(spec):
        perms.append(tuple(position[sym.apply_edge(spec, e)] for e in edges))
    logger.debug(f"Built {len(perms)} edge permutations for G_{{{spec.n},{spec.m}}}")
    return tuple(perms)
