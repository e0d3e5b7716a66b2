"""
ASCII rendering of vertex sets.

Row j = m is printed first so the picture has x_{11} in the lower-left
corner; columns run left to right as i = 1..n. Chosen cells are '*', the
rest 'o'.
"""

import logging
from typing import Any, Dict, Optional

import numpy as np

from ..formulas.constructions import ConstructionId, construct
from ..grid.grid_model import GridSpec, build_grid
from ..solver.profile_dp import gamma_t_dp
from ..solver.vertex_set import VertexSet
from ..utils.errors import InvalidInput

logger = logging.getLogger(__name__)

CHOSEN = "*"
EMPTY = "o"

RENDER_SETS = ("prop51", "prop52", "solver", "stripe", "zigzag")
RENDER_VARIANTS = ("d", "dprime")

# Command-line set names and the family they select.
SET_ALIASES = {"prop51": "stripe", "prop52": "zigzag"}

_CONSTRUCTIONS = {
    ("stripe", "d"): ConstructionId.STRIPE_D,
    ("stripe", "dprime"): ConstructionId.STRIPE_DPRIME,
    ("zigzag", "d"): ConstructionId.ZIGZAG_D,
    ("zigzag", "dprime"): ConstructionId.ZIGZAG_DPRIME,
}


def render(d: VertexSet) -> str:
    """Draw a vertex set as an m-line character grid."""
    spec = d.spec
    buffer = np.full((spec.m, spec.n), EMPTY, dtype="<U1")
    for v in d:
        buffer[spec.m - v.j, v.i - 1] = CHOSEN
    return "\n".join("".join(row) for row in buffer)


def resolve_set(
    n: int,
    m: int,
    which: str,
    variant: str = "d",
    config: Optional[Dict[str, Any]] = None,
) -> VertexSet:
    """
    Build the set named on the command line.

    Args:
        n: Number of columns.
        m: Number of rows; the four-row families need m = 4.
        which: "solver", a family name ("stripe", "zigzag") or its alias
            from SET_ALIASES.
        variant: "d" or "dprime" for the four-row families.
        config: Optional configuration dict for the solver.

    Raises:
        InvalidInput: If the family does not apply to (n, m).
    """
    if which == "solver":
        result = gamma_t_dp(build_grid(GridSpec(n, m)), config=config)
        if result.is_undefined:
            raise InvalidInput(f"G_{{{n},{m}}} has no total dominating set")
        return result.witness

    which = SET_ALIASES.get(which, which)
    cid = _CONSTRUCTIONS.get((which, variant))
    if cid is None:
        raise InvalidInput(f"Unknown set {which!r} with variant {variant!r}")
    if m != 4:
        raise InvalidInput(f"{which} is defined on four-row grids, got m={m}")
    return construct(cid, n)
