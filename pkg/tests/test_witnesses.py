"""
Tests for witness edge sets.
"""

import pytest

from src.bondage.engine import verify_witness
from src.formulas.closed_forms import bondage_formula
from src.formulas.witnesses import WitnessSource, witness_edges, witness_record
from src.grid.grid_model import Edge, GridSpec, build_grid
from src.utils.errors import NoneAvailable


class TestConstructedWitnesses:
    """Tests for explicitly constructed witnesses."""

    def test_two_rows(self):
        record = witness_record(6, 2)
        assert record.edges == frozenset({Edge.horizontal(5, 1)})
        assert record.source is WitnessSource.CONSTRUCTION
        assert record.names == ["H:5,1"]

    def test_three_rows(self):
        assert witness_edges(7, 3) == frozenset({Edge.horizontal(6, 2)})

    def test_four_rows(self):
        assert witness_edges(10, 4) == frozenset(Edge.horizontal(5, j) for j in range(1, 5))

    def test_transposed(self):
        record = witness_record(2, 6)
        assert record.edges == frozenset({Edge.vertical(1, 5)})
        assert record.to_dict() == {"n": 2, "m": 6, "edges": ["V:1,5"], "source": "construction"}

    @pytest.mark.parametrize("n, m", [
        (3, 2), (4, 2), (5, 2), (6, 2), (7, 2), (8, 2), (3, 3), (6, 3), (9, 3),
        (9, 4), (10, 4), (11, 4), (12, 4), (13, 4), (14, 4),
    ])
    def test_witness_raises_gamma_t(self, n, m):
        edges = witness_edges(n, m)
        assert len(edges) == bondage_formula(n, m).value
        assert verify_witness(build_grid(GridSpec(n, m)), edges)


class TestSearchedWitnesses:
    """Tests for witnesses found by search."""

    def test_search_can_be_disabled(self):
        with pytest.raises(NoneAvailable):
            witness_record(4, 4, allow_search=False)

    def test_four_by_four(self):
        record = witness_record(4, 4)
        assert record.source is WitnessSource.DIRECT_CHECK
        assert len(record.edges) == 2
        assert verify_witness(build_grid(GridSpec(4, 4)), record.edges)

    @pytest.mark.parametrize("n", [4, 5, 6, 10])
    def test_paths(self, n):
        record = witness_record(n, 1)
        assert len(record.edges) == bondage_formula(n, 1).value
        assert verify_witness(build_grid(GridSpec(n, 1)), record.edges)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_four_rows_by_search(self, n):
        record = witness_record(n, 4)
        assert len(record.edges) == bondage_formula(n, 4).value
        assert verify_witness(build_grid(GridSpec(n, 4)), record.edges)

    @pytest.mark.parametrize("n, m", [(5, 5), (2, 1), (3, 1), (1, 1)])
    def test_not_covered(self, n, m):
        with pytest.raises(NoneAvailable):
            witness_record(n, m)
