"""
Closed-form total domination and total bondage values of small grids.

Values are returned as FormulaValue records so callers can tell an exact
value from an upper bound or an uncovered case. Grids are symmetric in
(n, m), so both functions sort the dimensions first.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

logger = logging.getLogger(__name__)


class FormulaKind(Enum):
    """How a formula value constrains the true value."""

    EXACT = "exact"
    UPPER_BOUND = "upper_bound"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FormulaValue:
    """
    A formula result. UNKNOWN carries no value; the others carry a natural
    number.
    """

    kind: FormulaKind
    value: Optional[int] = None

    @classmethod
    def exact(cls, value: int) -> "FormulaValue":
        return cls(FormulaKind.EXACT, value)

    @classmethod
    def upper_bound(cls, value: int) -> "FormulaValue":
        return cls(FormulaKind.UPPER_BOUND, value)

    @classmethod
    def unknown(cls) -> "FormulaValue":
        return cls(FormulaKind.UNKNOWN)

    @property
    def is_exact(self) -> bool:
        return self.kind is FormulaKind.EXACT

    @property
    def is_upper_bound(self) -> bool:
        return self.kind is FormulaKind.UPPER_BOUND

    @property
    def is_unknown(self) -> bool:
        return self.kind is FormulaKind.UNKNOWN

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "value": self.value}

    def __str__(self) -> str:
        if self.is_unknown:
            return "?"
        if self.is_upper_bound:
            return f"<={self.value}"
        return f"={self.value}"


def _sorted_dims(n: int, m: int) -> Tuple[int, int]:
    return (n, m) if n >= m else (m, n)


def gamma_t_formula(n: int, m: int) -> FormulaValue:
    """
    Total domination number of G_{n,m} for short sides up to 4.

    Args:
        n: Number of columns.
        m: Number of rows.

    Returns:
        FormulaValue: EXACT when covered, UNKNOWN otherwise (paths longer
        than 3, and grids with both sides at least 5).
    """
    a, b = _sorted_dims(n, m)
    if b == 1:
        # G_{1,2} and G_{1,3} fall under the two- and three-row lines.
        if a in (2, 3):
            return FormulaValue.exact(2)
        return FormulaValue.unknown()
    if b == 2:
        return FormulaValue.exact(2 * ((a + 2) // 3))
    if b == 3:
        return FormulaValue.exact(a)
    if b == 4:
        value = (6 * a + 8) // 5
        if a % 5 in (0, 3):
            value += 1
        return FormulaValue.exact(value)
    return FormulaValue.unknown()


def bondage_formula(n: int, m: int) -> FormulaValue:
    """
    Total bondage number of G_{n,m} for short sides up to 4.

    Paths are covered for four or more vertices. For four rows the values
    for n = 2, 0, 3 (mod 5) are upper bounds only.

    Args:
        n: Number of columns.
        m: Number of rows.

    Returns:
        FormulaValue: EXACT, UPPER_BOUND or UNKNOWN.
    """
    a, b = _sorted_dims(n, m)
    if b == 1:
        if a >= 4:
            return FormulaValue.exact(2 if a % 4 == 2 else 1)
        return FormulaValue.unknown()
    if b == 2:
        return FormulaValue.exact({0: 1, 2: 2, 1: 3}[a % 3])
    if b == 3:
        return FormulaValue.exact(1)
    if b == 4:
        if a == 6:
            return FormulaValue.exact(2)
        residue = a % 5
        if residue == 1:
            return FormulaValue.exact(1)
        if residue == 4:
            return FormulaValue.exact(2)
        if residue == 2:
            return FormulaValue.upper_bound(3)
        return FormulaValue.upper_bound(4)
    return FormulaValue.unknown()
