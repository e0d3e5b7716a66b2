"""
Column push-down of a total dominating set.

Given a total dominating set D of G_{n,m} and a column i, the cut
D' = D restricted to columns 1..i+1 is rewritten into a total dominating
set of G_{i,m} that is no larger: members of Y_{i+1} are dropped, and for
every member of D' in Y_i that was dominated only from Y_{i+1} its row is
re-covered by x_{(i-1)j}.
"""

import logging

from ..grid.grid_model import GridGraph, GridSpec, Vertex, build_grid
from ..utils.errors import InvalidInput
from .vertex_set import VertexSet, is_total_dominating

logger = logging.getLogger(__name__)


def push_down(g: GridGraph, d: VertexSet, i: int) -> VertexSet:
    """
    Rewrite D into a total dominating set of the first i columns.

    The direct rewrite keeps D' minus Y_{i+1} and adds x_{(i-1)j} for every
    row j whose x_{ij} is in D' with all its D'-neighbours in Y_{i+1}. A
    non-member of D' in Y_i can also lose its only dominator that way; in
    that case further rows with x_{(i+1)j} in D' are folded onto
    x_{(i-1)j}, lowest j first, until the result is total dominating. The
    complete fold maps column i+1 onto column i-1, which preserves
    adjacency, so the loop always terminates with |D''| <= |D'|.

    Args:
        g: A clean grid G_{n,m}.
        d: A total dominating set of g.
        i: The column to cut at, 2 <= i <= n-1.

    Returns:
        VertexSet: D'' as a set of G_{i,m}.

    Raises:
        InvalidInput: If g is not clean, D is not total dominating, or i is
            out of range.
    """
    if not g.is_clean:
        raise InvalidInput("push_down requires a clean grid")
    if d.spec != g.spec:
        raise InvalidInput(f"Vertex set belongs to G_{{{d.spec.n},{d.spec.m}}}, not {g.describe()}")
    if not 2 <= i <= g.n - 1:
        raise InvalidInput(f"Column {i} is outside [2, {g.n - 1}]")
    if not is_total_dominating(g, d):
        raise InvalidInput("push_down requires a total dominating set")

    m = g.m
    cut = d.restrict_columns(i + 1)
    cut_spec = cut.spec
    cut_graph = build_grid(cut_spec)

    def has(col: int, row: int) -> bool:
        return Vertex(col, row) in cut

    next_rows = [j for j in range(1, m + 1) if has(i + 1, j)]
    if not next_rows:
        logger.debug(f"push_down at column {i}: nothing in Y_{i + 1}, D' kept")
        return cut.restrict_columns(i)

    # B_i: rows whose member of Y_i has all its D'-neighbours in Y_{i+1}.
    lifted = []
    for j in range(1, m + 1):
        if not has(i, j):
            continue
        partners = cut_graph.neighbors(Vertex(i, j)) & set(cut)
        if partners and all(p.i == i + 1 for p in partners):
            lifted.append(j)

    kept = cut.restrict_columns(i)
    target = GridSpec(i, m)
    target_graph = build_grid(target)

    def with_rows(rows) -> VertexSet:
        return kept | VertexSet.of(target, (Vertex(i - 1, j) for j in rows))

    result = with_rows(lifted)
    if not is_total_dominating(target_graph, result):
        rows = list(lifted)
        for j in next_rows:
            if j in rows:
                continue
            rows.append(j)
            result = with_rows(rows)
            if is_total_dominating(target_graph, result):
                break
        logger.info(
            f"push_down at column {i}: direct rewrite was not total dominating, "
            f"folded rows {sorted(rows)}"
        )

    logger.debug(f"push_down at column {i}: |D'|={len(cut)}, |D''|={len(result)}")
    return result
