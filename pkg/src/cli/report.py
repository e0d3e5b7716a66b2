"""
Verification reports and result tables.
"""

import io
import csv
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from ..bondage.engine import BondageResult, BondageStatus
from ..formulas.closed_forms import FormulaValue
from ..solver.vertex_set import GammaResult, UNDEFINED

logger = logging.getLogger(__name__)


class CheckStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


class Agreement(Enum):
    """Formula vs solver comparison outcome."""

    AGREE = "agree"
    BOUND_NOT_TIGHT = "bound-not-tight"
    UNCHECKED = "unchecked"
    FAIL = "fail"


def gamma_agreement(formula: FormulaValue, solver: GammaResult) -> Agreement:
    if not formula.is_exact:
        return Agreement.UNCHECKED
    return Agreement.AGREE if formula.value == solver.value else Agreement.FAIL


def bondage_agreement(formula: FormulaValue, solver: BondageResult) -> Agreement:
    """
    Compare a bondage formula value with a search result.

    Exact formulas must match an exact search value. An upper bound fails
    when the search proves a larger value or exhausts every level up to
    the bound; an exact value below the bound is reported as not tight.
    Inconclusive searches are unchecked.
    """
    if formula.is_unknown:
        return Agreement.UNCHECKED
    if solver.status is BondageStatus.INFINITY:
        return Agreement.FAIL

    bound = formula.value
    if solver.status is BondageStatus.LOWER_BOUND_ONLY:
        # b_t > k_max here.
        return Agreement.FAIL if bound <= solver.value else Agreement.UNCHECKED

    if formula.is_exact:
        return Agreement.AGREE if solver.value == bound else Agreement.FAIL
    if solver.value > bound:
        return Agreement.FAIL
    return Agreement.AGREE if solver.value == bound else Agreement.BOUND_NOT_TIGHT


@dataclass
class CheckResult:
    """One line of a verification report."""

    suite: str
    name: str
    status: CheckStatus
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.suite, "name": self.name, "status": self.status.value, "detail": self.detail}

    def __str__(self) -> str:
        text = f"[{self.status.value}] {self.suite}: {self.name}"
        return f"{text} ({self.detail})" if self.detail else text


@dataclass
class TableRow:
    """Formula and solver values for one grid size."""

    n: int
    m: int
    gamma_formula: FormulaValue
    gamma_solver: GammaResult
    bondage_formula: FormulaValue
    bondage_solver: Optional[BondageResult]
    witness: List[str] = field(default_factory=list)
    runtimes: Dict[str, float] = field(default_factory=dict)

    @property
    def gamma_agreement(self) -> Agreement:
        return gamma_agreement(self.gamma_formula, self.gamma_solver)

    @property
    def bondage_agreement(self) -> Agreement:
        if self.bondage_solver is None:
            return Agreement.UNCHECKED
        return bondage_agreement(self.bondage_formula, self.bondage_solver)

    @property
    def agreement_flag(self) -> bool:
        return Agreement.FAIL not in (self.gamma_agreement, self.bondage_agreement)

    def to_dict(self, include_runtimes: bool = False) -> Dict[str, Any]:
        bondage = self.bondage_solver
        data = {
            "n": self.n,
            "m": self.m,
            "gamma_formula": self.gamma_formula.to_dict(),
            "gamma_solver": UNDEFINED if self.gamma_solver.value is None else self.gamma_solver.value,
            "bondage_formula": self.bondage_formula.to_dict(),
            "bondage_solver": None if bondage is None else {
                "status": bondage.status.value,
                "value": bondage.to_dict()["value"],
            },
            "witness": self.witness,
            "agreement": self.agreement_flag,
            "gamma_agreement": self.gamma_agreement.value,
            "bondage_agreement": self.bondage_agreement.value,
        }
        if include_runtimes:
            data["runtimes"] = {key: round(value, 6) for key, value in self.runtimes.items()}
        return data

    def cells(self) -> List[str]:
        bondage = "" if self.bondage_solver is None else str(self.bondage_solver)
        return [
            str(self.n),
            str(self.m),
            str(self.gamma_formula),
            str(self.gamma_solver),
            str(self.bondage_formula),
            bondage,
            " ".join(self.witness),
            self.bondage_agreement.value,
        ]


TABLE_HEADER = ["n", "m", "gamma_t_formula", "gamma_t", "b_t_formula", "b_t", "witness", "agreement"]


@dataclass
class CampaignReport:
    """Checks and table rows collected by one campaign run."""

    checks: List[CheckResult] = field(default_factory=list)
    rows: List[TableRow] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def add(self, suite: str, name: str, status: CheckStatus, detail: str = "") -> CheckResult:
        check = CheckResult(suite, name, status, detail)
        self.checks.append(check)
        log = logger.warning if status is CheckStatus.FAIL else logger.debug
        log(str(check))
        return check

    def check(self, suite: str, name: str, ok: bool, detail: str = "") -> CheckResult:
        return self.add(suite, name, CheckStatus.PASS if ok else CheckStatus.FAIL, detail)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures and all(row.agreement_flag for row in self.rows)

    def counts(self) -> Dict[str, int]:
        result = {status.value: 0 for status in CheckStatus}
        for c in self.checks:
            result[c.status.value] += 1
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "counts": self.counts(),
            "checks": [c.to_dict() for c in self.checks],
            "rows": [row.to_dict() for row in self.rows],
        }

    def to_text(self) -> str:
        lines = [str(c) for c in self.checks]
        if self.rows:
            lines.append(format_table(self.rows))
        counts = self.counts()
        lines.append(
            f"{'PASSED' if self.passed else 'FAILED'}: "
            f"{counts['PASS']} pass, {counts['FAIL']} fail, {counts['INFO']} info"
        )
        return "\n".join(lines)


def format_table(rows: List[TableRow]) -> str:
    """Fixed-width text table."""
    grid = [TABLE_HEADER] + [row.cells() for row in rows]
    widths = [max(len(line[col]) for line in grid) for col in range(len(TABLE_HEADER))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in grid
    )


def format_csv(rows: List[TableRow]) -> str:
    """CSV with a header row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow(row.cells())
    return buffer.getvalue()
