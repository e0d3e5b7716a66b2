"""
Enumeration of removable edge subsets of a clean grid.

Subsets are handled as sorted tuples of canonical edge indices (positions
in GridSpec.edges()), so tuple comparison is the canonical subset order.
A subset is valid when removing it leaves every vertex with at least one
edge. With symmetry reduction only the lexicographically least member of
each orbit under the grid automorphisms is produced.
"""

import logging
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Set, Tuple

from ..grid.grid_model import Edge, GridSpec
from ..grid.symmetry import edge_permutations

logger = logging.getLogger(__name__)

IndexSubset = Tuple[int, ...]


class SubsetSpace:
    """Canonical edge indexing and validity checks for one grid size."""

    def __init__(self, spec: GridSpec):
        self.spec = spec
        self.edges: List[Edge] = spec.edges()
        self.position = {e: idx for idx, e in enumerate(self.edges)}
        self.ends: List[Tuple[int, int]] = []
        degree = [0] * spec.vertex_count
        for e in self.edges:
            u, v = e.endpoints()
            a, b = spec.index(u), spec.index(v)
            self.ends.append((a, b))
            degree[a] += 1
            degree[b] += 1
        self.degree = degree
        self.permutations = edge_permutations(spec)[1:]

    def is_valid(self, subset: Iterable[int]) -> bool:
        """True iff removing the edges leaves no vertex of degree 0."""
        lost = {}
        for idx in subset:
            for cell in self.ends[idx]:
                count = lost.get(cell, 0) + 1
                if count == self.degree[cell]:
                    return False
                lost[cell] = count
        return True

    def is_canonical(self, subset: IndexSubset) -> bool:
        """True iff no grid symmetry maps the subset to a smaller one."""
        for perm in self.permutations:
            if tuple(sorted(perm[idx] for idx in subset)) < subset:
                return False
        return True

    def orbit(self, subset: IndexSubset) -> Set[IndexSubset]:
        images = {subset}
        for perm in self.permutations:
            images.add(tuple(sorted(perm[idx] for idx in subset)))
        return images

    def to_edges(self, subset: Iterable[int]) -> FrozenSet[Edge]:
        return frozenset(self.edges[idx] for idx in subset)

    def to_indices(self, edges: Iterable[Edge]) -> IndexSubset:
        return tuple(sorted(self.position[e] for e in edges))

    def index_subsets(self, k: int, use_symmetry: bool = True) -> Iterator[IndexSubset]:
        """Valid k-subsets in canonical order, one per orbit when reducing."""
        for subset in combinations(range(len(self.edges)), k):
            if not self.is_valid(subset):
                continue
            if use_symmetry and not self.is_canonical(subset):
                continue
            yield subset


def canonical_subsets(spec: GridSpec, k: int, use_symmetry: bool = True) -> Iterator[FrozenSet[Edge]]:
    """
    Stream the removable k-edge subsets of the clean grid.

    Args:
        spec: The grid dimensions.
        k: Subset size, at least 1.
        use_symmetry: Yield one representative per orbit when True.

    Yields:
        FrozenSet[Edge]: Subsets whose removal isolates no vertex, in
        canonical order.
    """
    space = SubsetSpace(spec)
    for subset in space.index_subsets(k, use_symmetry):
        yield space.to_edges(subset)


def orbit(spec: GridSpec, subset: Iterable[Edge]) -> Set[FrozenSet[Edge]]:
    """All images of an edge subset under the symmetries of the grid."""
    space = SubsetSpace(spec)
    return {space.to_edges(image) for image in space.orbit(space.to_indices(subset))}
