"""
Tests for removable edge subset enumeration.
"""

import unittest
from math import comb

from src.grid.grid_model import Edge, GridSpec
from src.bondage.subsets import SubsetSpace, canonical_subsets, orbit


class TestSubsetSpace(unittest.TestCase):
    """Tests for the SubsetSpace class."""

    def test_validity(self):
        """Test that subsets isolating a vertex are invalid."""
        space = SubsetSpace(GridSpec(2, 2))
        corner = space.to_indices([Edge.horizontal(1, 1), Edge.vertical(1, 1)])
        opposite = space.to_indices([Edge.horizontal(1, 1), Edge.horizontal(1, 2)])
        self.assertFalse(space.is_valid(corner))
        self.assertTrue(space.is_valid(opposite))

    def test_only_edge_of_a_path(self):
        """Test that removing the edge of G_{1,2} is never valid."""
        space = SubsetSpace(GridSpec(1, 2))
        self.assertEqual(list(space.index_subsets(1)), [])

    def test_index_round_trip(self):
        """Test conversion between edges and canonical indices."""
        space = SubsetSpace(GridSpec(3, 2))
        edges = [Edge.vertical(3, 1), Edge.horizontal(1, 2)]
        indices = space.to_indices(edges)
        self.assertEqual(indices, tuple(sorted(indices)))
        self.assertEqual(space.to_edges(indices), frozenset(edges))

    def test_canonical_is_least_in_orbit(self):
        """Test that canonical subsets are the least member of their orbit."""
        space = SubsetSpace(GridSpec(4, 3))
        for subset in space.index_subsets(2, use_symmetry=True):
            self.assertEqual(min(space.orbit(subset)), subset)


class TestCanonicalSubsets(unittest.TestCase):
    """Tests for canonical_subsets and orbit."""

    def test_square_single_edges(self):
        """Test that all four edges of G_{2,2} form one orbit."""
        spec = GridSpec(2, 2)
        self.assertEqual(len(list(canonical_subsets(spec, 1))), 1)
        self.assertEqual(len(list(canonical_subsets(spec, 1, use_symmetry=False))), 4)

    def test_square_pairs(self):
        """Test the removable pairs of the 4-cycle."""
        spec = GridSpec(2, 2)
        self.assertEqual(len(list(canonical_subsets(spec, 2, use_symmetry=False))), 2)
        self.assertEqual(len(list(canonical_subsets(spec, 2))), 1)

    def test_single_edges_without_symmetry(self):
        """Test that single-edge removals of a grid with m >= 2 are all valid."""
        spec = GridSpec(4, 3)
        self.assertEqual(len(list(canonical_subsets(spec, 1, use_symmetry=False))), spec.edge_count)

    def test_orbits_cover_everything(self):
        """Test that the orbits of the canonical subsets partition all valid subsets."""
        spec = GridSpec(3, 3)
        everything = set(canonical_subsets(spec, 2, use_symmetry=False))
        covered = set()
        for subset in canonical_subsets(spec, 2):
            images = orbit(spec, subset)
            self.assertTrue(images.isdisjoint(covered))
            covered |= images
        self.assertEqual(covered, everything)
        self.assertLessEqual(len(everything), comb(spec.edge_count, 2))

    def test_canonical_order(self):
        """Test that subsets stream in canonical order."""
        space = SubsetSpace(GridSpec(3, 2))
        subsets = list(space.index_subsets(2, use_symmetry=False))
        self.assertEqual(subsets, sorted(subsets))

    def test_orbit_of_corner_edge(self):
        """Test the orbit of a corner edge of a rectangle."""
        images = orbit(GridSpec(3, 2), [Edge.horizontal(1, 1)])
        self.assertEqual(images, {
            frozenset({Edge.horizontal(1, 1)}),
            frozenset({Edge.horizontal(2, 1)}),
            frozenset({Edge.horizontal(1, 2)}),
            frozenset({Edge.horizontal(2, 2)}),
        })


if __name__ == "__main__":
    unittest.main()
