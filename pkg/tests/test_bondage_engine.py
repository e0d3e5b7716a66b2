"""
Tests for the total bondage engine and the four-row experiment.
"""

import pytest

from src.grid.grid_model import Edge, GridSpec, build_grid
from src.bondage.engine import (
    INFINITY, BondageEngine, BondageResult, BondageStatus, SearchMode,
    total_bondage, verify_witness
)
from src.formulas.closed_forms import bondage_formula
from src.bondage.experiment import OPEN_RESIDUES, ConjectureRow, run_conjecture_experiment
from src.utils.errors import EdgeNotPresent, InvalidInput


class TestTotalBondage:
    """Tests for total_bondage."""

    @pytest.mark.parametrize("n, m, expected", [
        (3, 2, 1), (5, 2, 2), (4, 2, 3), (6, 2, 1), (4, 3, 1), (6, 3, 1), (4, 4, 2), (1, 4, 1),
    ])
    def test_values(self, grid, n, m, expected):
        g = grid(n, m)
        result = total_bondage(g, expected)
        assert result.status is BondageStatus.EXACT
        assert result.value == expected
        assert len(result.witness) == expected
        assert result.raised_gamma_t > result.base_gamma_t
        assert verify_witness(g, result.witness)

    def test_single_edge_graph_is_infinite(self, grid):
        result = total_bondage(grid(1, 2), 3)
        assert result.status is BondageStatus.INFINITY
        assert str(result) == INFINITY
        assert result.to_dict()["value"] == INFINITY

    def test_lower_bound_only(self, grid):
        result = total_bondage(grid(4, 2), 2)
        assert result.status is BondageStatus.LOWER_BOUND_ONLY
        assert result.value == 2
        assert result.witness is None
        assert str(result) == "> 2"

    def test_symmetry_does_not_change_the_witness(self, grid):
        g = grid(5, 2)
        reduced = total_bondage(g, 2, use_symmetry=True)
        full = total_bondage(g, 2, use_symmetry=False)
        assert reduced.value == full.value == 2
        assert reduced.witness == full.witness

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 13) for m in range(1, 13) if 2 <= n * m <= 12])
    @pytest.mark.parametrize("k_max", [1, 2])
    def test_symmetry_is_neutral(self, grid, n, m, k_max):
        reduced = total_bondage(grid(n, m), k_max, use_symmetry=True)
        full = total_bondage(grid(n, m), k_max, use_symmetry=False)
        assert reduced.status is full.status
        assert reduced.value == full.value
        assert reduced.witness == full.witness

    @pytest.mark.parametrize("n", range(4, 17))
    def test_paths_match_formula(self, grid, n):
        formula = bondage_formula(n, 1)
        result = total_bondage(grid(n, 1), formula.value)
        assert result.status is BondageStatus.EXACT
        assert result.value == formula.value

    def test_first_hit_mode(self, grid):
        g = grid(4, 4)
        result = total_bondage(g, 2, mode=SearchMode.FIRST_HIT)
        assert result.value == 2
        assert verify_witness(g, result.witness)

    def test_stats(self, grid):
        result = total_bondage(grid(5, 2), 2)
        stats = result.stats
        assert stats.levels == 2
        assert stats.dp_calls + stats.prefiltered == stats.subsets_examined
        assert stats.prefiltered > 0
        assert "elapsed" not in stats.to_dict(include_elapsed=False)

    def test_invalid_inputs(self, grid):
        with pytest.raises(InvalidInput):
            total_bondage(build_grid(GridSpec(1, 1)), 1)
        with pytest.raises(InvalidInput):
            total_bondage(grid(3, 2).remove_edges([Edge.horizontal(1, 1)]), 1)
        with pytest.raises(InvalidInput):
            total_bondage(grid(3, 2), 0)

    def test_result_round_trip(self, grid):
        result = total_bondage(grid(5, 2), 2)
        rebuilt = BondageResult.from_dict(result.to_dict())
        assert rebuilt.status is result.status
        assert rebuilt.value == result.value
        assert rebuilt.witness == result.witness
        assert rebuilt.base_gamma_t == result.base_gamma_t
        assert BondageResult.from_dict({"status": "infinity", "value": INFINITY}).value is None

    def test_from_dict_rejects_unknown_status(self):
        with pytest.raises(ValueError):
            BondageResult.from_dict({"status": "maybe"})

    @pytest.mark.slow
    def test_parallel_matches_serial(self, grid):
        g = grid(4, 2)
        serial = total_bondage(g, 3)
        parallel = total_bondage(g, 3, config={"workers": 2, "parallel_threshold": 1})
        assert parallel.value == serial.value == 3
        assert parallel.witness == serial.witness
        assert parallel.stats.subsets_examined == serial.stats.subsets_examined

    @pytest.mark.slow
    def test_six_by_four(self, grid):
        result = total_bondage(grid(6, 4), 2)
        assert result.value == 2

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(2, 21))
    def test_two_rows_sweep(self, grid, n):
        result = total_bondage(grid(n, 2), 3)
        assert result.status is BondageStatus.EXACT
        assert result.value == {0: 1, 2: 2, 1: 3}[n % 3]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(2, 15))
    def test_three_rows_sweep(self, grid, n):
        result = total_bondage(grid(n, 3), 1)
        assert result.status is BondageStatus.EXACT
        assert result.value == 1

    @pytest.mark.slow
    @pytest.mark.parametrize("n, expected", [(11, 1), (16, 1), (4, 2), (6, 2), (9, 2)])
    def test_four_rows_exact_values(self, grid, n, expected):
        result = total_bondage(grid(n, 4), 2)
        assert result.status is BondageStatus.EXACT
        assert result.value == expected


class TestBondageEngine:
    """Tests for BondageEngine setup."""

    def test_base_value(self, grid):
        engine = BondageEngine(grid(6, 4))
        assert engine.base_value == 8
        assert engine.witness_mask.bit_count() == 8

    def test_workers_from_config(self, grid):
        engine = BondageEngine(grid(3, 2), config={"workers": 3})
        assert engine.workers == 3


class TestVerifyWitness:
    """Tests for verify_witness."""

    def test_known_witness(self, grid):
        assert verify_witness(grid(6, 2), [Edge.horizontal(5, 1)])

    def test_single_edge_is_not_enough(self, grid):
        assert not verify_witness(grid(5, 2), [Edge.horizontal(4, 1)])

    def test_isolating_removal(self, grid):
        assert not verify_witness(grid(2, 2), [Edge.horizontal(1, 1), Edge.vertical(1, 1)])

    def test_missing_edge(self, grid):
        with pytest.raises(EdgeNotPresent):
            verify_witness(grid(3, 2), [Edge.horizontal(3, 1)])


class TestConjectureExperiment:
    """Tests for run_conjecture_experiment."""

    def test_selects_open_residues(self, mocker):
        fake = BondageResult(BondageStatus.EXACT, 3)
        search = mocker.patch("src.bondage.experiment.total_bondage", return_value=fake)
        rows = run_conjecture_experiment([3, 7, 8, 9, 10, 11, 12, 7])
        assert [row.n for row in rows] == [7, 8, 10, 12]
        assert all(row.n % 5 in OPEN_RESIDUES for row in rows)
        assert search.call_count == 4
        assert [row.upper_bound for row in rows] == [3, 4, 4, 3]

    def test_explicit_depth(self, mocker):
        search = mocker.patch(
            "src.bondage.experiment.total_bondage",
            return_value=BondageResult(BondageStatus.LOWER_BOUND_ONLY, 2),
        )
        rows = run_conjecture_experiment([8], k_max=2)
        assert search.call_args.args[1] == 2
        assert rows[0].tight is None

    def test_tightness(self):
        assert ConjectureRow(7, 3, BondageResult(BondageStatus.EXACT, 3)).tight is True
        assert ConjectureRow(7, 3, BondageResult(BondageStatus.EXACT, 2)).tight is False
        assert ConjectureRow(7, 3, BondageResult(BondageStatus.LOWER_BOUND_ONLY, 2)).tight is None
        row = ConjectureRow(8, 4, BondageResult(BondageStatus.EXACT, 4)).to_dict()
        assert row["residue"] == 3
        assert row["tight"] is True

    def test_search_past_the_bound_is_not_tight(self, caplog):
        with caplog.at_level("ERROR", logger="src.bondage.experiment"):
            row = ConjectureRow(7, 3, BondageResult(BondageStatus.LOWER_BOUND_ONLY, 3))
            assert row.tight is False
        assert "contradicts the bound 3" in caplog.text
        assert ConjectureRow(8, 4, BondageResult(BondageStatus.INFINITY)).tight is False

    @pytest.mark.slow
    def test_seven_columns(self):
        rows = run_conjecture_experiment([7], k_max=3)
        result = rows[0].result
        assert result.status is BondageStatus.EXACT
        assert result.value <= 3
        assert verify_witness(build_grid(GridSpec(7, 4)), result.witness)
