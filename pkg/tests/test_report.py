"""
Tests for verification reports and tables.
"""

import csv
import io

import pytest

from src.bondage.engine import BondageResult, BondageStatus
from src.cli.report import (
    TABLE_HEADER, Agreement, CampaignReport, CheckStatus, TableRow,
    bondage_agreement, format_csv, format_table, gamma_agreement
)
from src.formulas.closed_forms import FormulaValue
from src.solver.vertex_set import GammaResult


def _exact(value):
    return BondageResult(BondageStatus.EXACT, value)


class TestAgreement:
    """Tests for formula/solver agreement rules."""

    @pytest.mark.parametrize("formula, result, expected", [
        (FormulaValue.exact(2), _exact(2), Agreement.AGREE),
        (FormulaValue.exact(2), _exact(1), Agreement.FAIL),
        (FormulaValue.upper_bound(3), _exact(3), Agreement.AGREE),
        (FormulaValue.upper_bound(3), _exact(2), Agreement.BOUND_NOT_TIGHT),
        (FormulaValue.upper_bound(3), _exact(4), Agreement.FAIL),
        (FormulaValue.upper_bound(3), BondageResult(BondageStatus.LOWER_BOUND_ONLY, 2), Agreement.UNCHECKED),
        (FormulaValue.upper_bound(3), BondageResult(BondageStatus.LOWER_BOUND_ONLY, 3), Agreement.FAIL),
        (FormulaValue.exact(2), BondageResult(BondageStatus.INFINITY), Agreement.FAIL),
        (FormulaValue.unknown(), _exact(5), Agreement.UNCHECKED),
    ])
    def test_bondage(self, formula, result, expected):
        assert bondage_agreement(formula, result) is expected

    def test_gamma(self):
        assert gamma_agreement(FormulaValue.exact(8), GammaResult(8)) is Agreement.AGREE
        assert gamma_agreement(FormulaValue.exact(8), GammaResult(7)) is Agreement.FAIL
        assert gamma_agreement(FormulaValue.unknown(), GammaResult(7)) is Agreement.UNCHECKED


def _row(n=6, m=4, gamma=8, bondage=None):
    return TableRow(
        n, m, FormulaValue.exact(8), GammaResult(gamma),
        FormulaValue.exact(2), bondage, ["H:1,1", "H:1,2"],
    )


class TestTableRow:
    """Tests for TableRow."""

    def test_agreement_flag(self):
        assert _row(bondage=_exact(2)).agreement_flag
        assert not _row(gamma=7, bondage=_exact(2)).agreement_flag
        assert not _row(bondage=_exact(3)).agreement_flag
        assert _row().bondage_agreement is Agreement.UNCHECKED

    def test_to_dict(self):
        data = _row(bondage=_exact(2)).to_dict()
        assert data["gamma_solver"] == 8
        assert data["bondage_solver"] == {"status": "exact", "value": 2}
        assert data["agreement"] is True
        assert "runtimes" not in data

    def test_cells(self):
        assert _row(bondage=_exact(2)).cells() == ["6", "4", "=8", "8", "=2", "2", "H:1,1 H:1,2", "agree"]


class TestFormatting:
    """Tests for table output."""

    def test_csv(self):
        text = format_csv([_row(bondage=_exact(2)), _row(n=7)])
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == TABLE_HEADER
        assert len(rows) == 3
        assert rows[2][5] == ""

    def test_text_table(self):
        lines = format_table([_row(bondage=_exact(2))]).splitlines()
        assert lines[0].split() == TABLE_HEADER
        assert lines[1].split()[:6] == ["6", "4", "=8", "8", "=2", "2"]


class TestCampaignReport:
    """Tests for CampaignReport."""

    def test_counts_and_failures(self):
        report = CampaignReport()
        report.check("formulas", "a", True)
        report.check("formulas", "b", False, "detail")
        report.add("conjecture", "c", CheckStatus.INFO)
        assert report.counts() == {"PASS": 1, "FAIL": 1, "INFO": 1}
        assert [c.name for c in report.failures] == ["b"]
        assert not report.passed
        assert "[FAIL] formulas: b (detail)" in report.to_text()
        assert report.to_text().endswith("FAILED: 1 pass, 1 fail, 1 info")

    def test_info_does_not_fail(self):
        report = CampaignReport()
        report.add("conjecture", "c", CheckStatus.INFO)
        assert report.passed
        assert report.to_dict()["passed"] is True

    def test_rows_count_towards_passing(self):
        report = CampaignReport(rows=[_row(gamma=7)])
        assert not report.passed
