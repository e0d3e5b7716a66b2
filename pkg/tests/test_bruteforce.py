"""
Tests for the exhaustive solvers.
"""

import pytest

from src.grid.grid_model import Edge, GridSpec, Vertex, build_grid
from src.solver.bruteforce import enumerate_min_tds, gamma_bruteforce, gamma_t_bruteforce
from src.solver.vertex_set import VertexSet, is_dominating, is_total_dominating
from src.utils.errors import InvalidInput, TooLarge


class TestGammaBruteforce:
    """Tests for gamma_bruteforce."""

    @pytest.mark.parametrize("n, m, expected", [(2, 2, 2), (1, 3, 1), (3, 3, 3), (4, 4, 4), (1, 1, 1)])
    def test_values(self, grid, n, m, expected):
        g = grid(n, m)
        result = gamma_bruteforce(g)
        assert result.value == expected
        assert is_dominating(g, result.witness)

    def test_too_large(self, grid):
        with pytest.raises(TooLarge):
            gamma_bruteforce(grid(5, 5))


class TestGammaTBruteforce:
    """Tests for gamma_t_bruteforce."""

    @pytest.mark.parametrize("n, m, expected", [(1, 2, 2), (2, 2, 2), (1, 4, 2), (7, 2, 6), (5, 3, 5), (4, 4, 6)])
    def test_values(self, grid, n, m, expected):
        g = grid(n, m)
        result = gamma_t_bruteforce(g)
        assert result.value == expected
        assert len(result.witness) == expected
        assert is_total_dominating(g, result.witness)

    def test_required_corner(self, grid):
        g = grid(5, 3)
        required = VertexSet.of(g.spec, [Vertex(5, 1)])
        result = gamma_t_bruteforce(g, required=required)
        assert result.value == 6
        assert Vertex(5, 1) in result.witness

    def test_required_must_be_live(self, grid):
        g = grid(3, 2).delete_vertices([Vertex(1, 1)])
        with pytest.raises(InvalidInput):
            gamma_t_bruteforce(g, required=VertexSet.of(g.spec, [Vertex(1, 1)]))

    def test_isolated_vertex_is_undefined(self, grid):
        g = grid(1, 2).remove_edges([Edge.vertical(1, 1)])
        assert gamma_t_bruteforce(g).is_undefined
        assert gamma_t_bruteforce(build_grid(GridSpec(1, 1))).is_undefined

    def test_edge_removal_raises_value(self, grid):
        g = grid(6, 2).remove_edges([Edge.horizontal(5, 1)])
        assert gamma_t_bruteforce(g).value == 5

    def test_cap_override(self, grid):
        with pytest.raises(TooLarge):
            gamma_t_bruteforce(grid(4, 3), cap=11)


class TestEnumerateMinTds:
    """Tests for enumerate_min_tds."""

    def test_square(self, grid):
        listing = enumerate_min_tds(grid(2, 2))
        assert not listing.truncated
        assert [d.names() for d in listing.sets] == [
            ["1,1", "1,2"], ["1,1", "2,1"], ["1,2", "2,2"], ["2,1", "2,2"],
        ]

    def test_path_of_four(self, grid):
        listing = enumerate_min_tds(grid(1, 4))
        assert [d.names() for d in listing.sets] == [["1,2", "1,3"]]

    def test_truncation(self, grid):
        listing = enumerate_min_tds(grid(2, 2), limit=2)
        assert listing.truncated
        assert len(listing) == 2

    def test_all_minimum_and_total(self, grid):
        g = grid(5, 3)
        listing = enumerate_min_tds(g)
        assert len(listing) > 0
        for d in listing.sets:
            assert len(d) == 5
            assert is_total_dominating(g, d)
            assert (d.mask & g.column_mask(1)).bit_count() <= 2
            assert (d.mask & g.column_mask(5)).bit_count() <= 2

    def test_too_large(self, grid):
        with pytest.raises(TooLarge):
            enumerate_min_tds(grid(7, 3))

    def test_undefined_graph(self, grid):
        g = grid(1, 2).remove_edges([Edge.vertical(1, 1)])
        assert len(enumerate_min_tds(g)) == 0
