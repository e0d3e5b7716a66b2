"""
Tests for the explicit minimum total dominating sets.
"""

import pytest

from src.formulas.closed_forms import gamma_t_formula
from src.formulas.constructions import (
    ConstructionId, ConstructionParams, construct, construction_edges, construction_graph
)
from src.grid.grid_model import Edge, GridSpec
from src.solver.vertex_set import VertexSet, is_total_dominating
from src.utils.errors import InvalidInput

FOUR_ROW = [ConstructionId.STRIPE_D, ConstructionId.STRIPE_DPRIME,
            ConstructionId.ZIGZAG_D, ConstructionId.ZIGZAG_DPRIME]


def _names(pairs):
    return VertexSet.from_names(GridSpec(9, 4), [f"{i},{j}" for i, j in pairs])


class TestFourRowFamilies:
    """Tests for the four-row families."""

    def test_stripe_nine_columns(self):
        d = construct(ConstructionId.STRIPE_D, 9)
        assert d == _names([(1, 2), (1, 3), (3, 1), (4, 1), (3, 4), (4, 4),
                            (6, 2), (6, 3), (8, 1), (9, 1), (8, 4), (9, 4)])

    def test_zigzag_nine_columns(self):
        d = construct(ConstructionId.ZIGZAG_D, 9)
        assert d == _names([(1, 1), (1, 2), (4, 1), (4, 2), (2, 4), (3, 4),
                            (6, 3), (6, 4), (9, 3), (9, 4), (7, 1), (8, 1)])

    @pytest.mark.parametrize("cid", FOUR_ROW)
    @pytest.mark.parametrize("n", [4, 9, 14, 19])
    def test_minimum_total_dominating(self, cid, n):
        d = construct(cid, n)
        g = construction_graph(cid, n)
        assert (g.n, g.m) == (n, 4)
        assert g.is_clean
        assert is_total_dominating(g, d)
        assert len(d) == gamma_t_formula(n, 4).value

    def test_primed_sets_differ(self):
        assert construct(ConstructionId.STRIPE_D, 9) != construct(ConstructionId.STRIPE_DPRIME, 9)

    @pytest.mark.parametrize("n", [5, 8, 10])
    def test_residue_condition(self, n):
        with pytest.raises(InvalidInput):
            construct(ConstructionId.STRIPE_D, n)


class TestLadderFamilies:
    """Tests for the two-row families."""

    def test_vertical_five_columns(self):
        d = construct(ConstructionId.LADDER_VERTICAL, 5, ConstructionParams(i=2))
        assert d.names() == ["1,1", "1,2", "4,1", "4,2"]
        assert construction_edges(ConstructionId.LADDER_VERTICAL, 5, ConstructionParams(i=2)) == [Edge.vertical(2, 1)]

    @pytest.mark.parametrize("n", [5, 8, 11])
    def test_every_single_edge_family(self, n):
        expected = gamma_t_formula(n, 2).value
        for i in range(1, n + 1):
            params = ConstructionParams(i=i)
            d = construct(ConstructionId.LADDER_VERTICAL, n, params)
            assert is_total_dominating(construction_graph(ConstructionId.LADDER_VERTICAL, n, params), d)
            assert len(d) == expected
        for i in range(1, n):
            for row in (1, 2):
                cid = ConstructionId.LADDER_HORIZONTAL_SPLIT if i % 3 == 1 else ConstructionId.LADDER_HORIZONTAL
                params = ConstructionParams(i=i, row=row)
                d = construct(cid, n, params)
                assert is_total_dominating(construction_graph(cid, n, params), d), (cid, i, row)
                assert len(d) == expected

    @pytest.mark.parametrize("n", [4, 7, 10])
    def test_two_vertical_edges(self, n):
        expected = gamma_t_formula(n, 2).value
        cid = ConstructionId.LADDER_TWO_VERTICAL
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                params = ConstructionParams(i=i, j=j)
                g = construction_graph(cid, n, params)
                assert g.removed_edges == frozenset({Edge.vertical(i, 1), Edge.vertical(j, 1)})
                d = construct(cid, n, params)
                assert is_total_dominating(g, d), (i, j)
                assert len(d) == expected

    def test_parameter_checks(self):
        with pytest.raises(InvalidInput):
            construct(ConstructionId.LADDER_VERTICAL, 6, ConstructionParams(i=2))
        with pytest.raises(InvalidInput):
            construct(ConstructionId.LADDER_VERTICAL, 5)
        with pytest.raises(InvalidInput):
            construct(ConstructionId.LADDER_HORIZONTAL, 5, ConstructionParams(i=1))
        with pytest.raises(InvalidInput):
            construct(ConstructionId.LADDER_HORIZONTAL_SPLIT, 5, ConstructionParams(i=2))
        with pytest.raises(InvalidInput):
            construct(ConstructionId.LADDER_HORIZONTAL, 5, ConstructionParams(i=2, row=3))
        with pytest.raises(InvalidInput):
            construct(ConstructionId.LADDER_TWO_VERTICAL, 7, ConstructionParams(i=3, j=3))

    def test_rows(self):
        assert ConstructionId.ZIGZAG_DPRIME.rows == 4
        assert ConstructionId.LADDER_TWO_VERTICAL.rows == 2
