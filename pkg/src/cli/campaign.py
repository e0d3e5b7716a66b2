"""
Verification campaigns and result tables.

A Campaign owns the configuration, the results cache and a seeded random
generator, and runs the named suites into a CampaignReport:

- formulas: closed forms against the DP and the bondage engine
- constructions: every explicit set family is a minimum total dominating set
- witnesses: every witness edge set raises gamma_t
- properties: column push-down, column deletion, end-column deletion,
  end-column bounds and constrained minima
- conjecture: exact four-row bondage values where only bounds are known
- oracle: DP against brute force on random instances, plus the domination
  sandwich and edge-removal monotonicity
"""

import time
import logging
from typing import Any, Dict, List, Optional

import numpy as np
import psutil

from ..bondage.engine import BondageResult, BondageStatus, total_bondage, verify_witness
from ..bondage.experiment import run_conjecture_experiment
from ..formulas.closed_forms import bondage_formula, gamma_t_formula
from ..formulas.constructions import (
    ConstructionId, ConstructionParams, construct, construction_graph
)
from ..formulas.witnesses import witness_record
from ..grid.grid_model import GridGraph, GridSpec, Vertex, build_grid
from ..solver.bruteforce import enumerate_min_tds, gamma_bruteforce, gamma_t_bruteforce
from ..solver.profile_dp import gamma_t_dp
from ..solver.push_down import push_down
from ..solver.vertex_set import GammaResult, VertexSet, is_total_dominating
from ..utils.config import DEFAULT_CONFIG
from ..utils.errors import NoneAvailable
from .cache import ResultsCache
from .report import Agreement, CampaignReport, CheckStatus, TableRow, bondage_agreement

logger = logging.getLogger(__name__)

SUITES = ("formulas", "constructions", "witnesses", "properties", "conjecture", "oracle")

# Command-line suite names and the suite they run.
SUITE_ALIASES = {"lemmas": "properties"}

# Suites run by "all"; the conjecture measurements are requested explicitly.
DEFAULT_SUITES = ("formulas", "constructions", "witnesses", "properties", "oracle")

ORACLE_INSTANCES = 200


def gamma_payload(g: GridGraph, result: GammaResult) -> Dict[str, Any]:
    data = result.to_dict()
    return {"n": g.n, "m": g.m, "gamma_t": data["value"], "witness": data["witness"]}


def bondage_payload(g: GridGraph, result: BondageResult) -> Dict[str, Any]:
    payload = {"n": g.n, "m": g.m}
    payload.update(result.to_dict(include_elapsed=False))
    return payload


class Campaign:
    """Runs suites and tables with shared configuration and cache."""

    def __init__(
        self,
        config: Optional[Dict[str, Any]] = None,
        cache: Optional[ResultsCache] = None,
        seed: Optional[int] = None,
    ):
        """
        Initialize the campaign.

        Args:
            config: Configuration dict; DEFAULT_CONFIG values fill the gaps.
            cache: Results cache; None disables caching.
            seed: Seed for the random suites; defaults to config["seed"].
        """
        self.config = dict(DEFAULT_CONFIG)
        self.config.update(config or {})
        self.cache = cache
        self.seed = self.config["seed"] if seed is None else seed
        self.rng = np.random.default_rng(self.seed)
        self.process = psutil.Process()

    # ------------------------------------------------------------------
    # Cached computations
    # ------------------------------------------------------------------

    def gamma_t(self, g: GridGraph, engine: str = "dp") -> GammaResult:
        """gamma_t through the cache; engine is "dp" or "brute"."""
        operation = f"gamma_t:{engine}"
        if self.cache is not None:
            cached = self.cache.get(g, operation)
            if cached is not None:
                return GammaResult.from_dict(g.spec, {"value": cached["gamma_t"], "witness": cached["witness"]})

        if engine == "brute":
            result = gamma_t_bruteforce(g, config=self.config)
        else:
            result = gamma_t_dp(g, config=self.config)
        if self.cache is not None:
            self.cache.put(g, operation, gamma_payload(g, result))
        return result

    def bondage(self, g: GridGraph, k_max: int, use_symmetry: bool = True) -> BondageResult:
        """Total bondage through the cache, keyed by depth and symmetry mode."""
        operation = f"bondage:k{k_max}:{'sym' if use_symmetry else 'full'}"
        if self.cache is not None:
            cached = self.cache.get(g, operation)
            if cached is not None:
                return BondageResult.from_dict(cached)

        result = total_bondage(g, k_max, use_symmetry=use_symmetry, config=self.config)
        if self.cache is not None:
            self.cache.put(g, operation, bondage_payload(g, result))
        return result

    # ------------------------------------------------------------------
    # Suites
    # ------------------------------------------------------------------

    def run(self, suites: List[str], max_n: int) -> CampaignReport:
        """
        Run suites in order.

        Args:
            suites: Suite names from SUITES or SUITE_ALIASES.
            max_n: Largest column count examined.

        Returns:
            CampaignReport: All checks, with memory and timing in meta.
        """
        report = CampaignReport()
        started = time.perf_counter()
        for suite in (SUITE_ALIASES.get(name, name) for name in suites):
            logger.info(f"Running suite {suite} up to n={max_n}")
            suite_started = time.perf_counter()
            getattr(self, f"suite_{suite}")(report, max_n)
            report.meta[f"{suite}_seconds"] = round(time.perf_counter() - suite_started, 3)
        report.meta["elapsed"] = round(time.perf_counter() - started, 3)
        report.meta["rss_mb"] = round(self.process.memory_info().rss / (1024 * 1024), 1)
        report.meta["seed"] = self.seed
        logger.info(f"Campaign finished: {report.counts()} in {report.meta['elapsed']}s")
        return report

    def suite_formulas(self, report: CampaignReport, max_n: int):
        for m in range(1, 5):
            for n in range(m, max_n + 1):
                g = build_grid(GridSpec(n, m))
                formula = gamma_t_formula(n, m)
                if formula.is_exact:
                    value = self.gamma_t(g).value
                    report.check("formulas", f"gamma_t(G_{n},{m})", value == formula.value,
                                 f"formula {formula.value}, solver {value}")

                formula = bondage_formula(n, m)
                if formula.is_unknown:
                    continue
                k_max = formula.value if formula.is_exact else self.config["table_k_max"]
                result = self.bondage(g, k_max)
                agreement = bondage_agreement(formula, result)
                detail = f"formula {formula}, solver {result.status.value} {result}"
                if agreement is Agreement.FAIL:
                    report.add("formulas", f"b_t(G_{n},{m})", CheckStatus.FAIL, detail)
                elif agreement is Agreement.AGREE:
                    report.add("formulas", f"b_t(G_{n},{m})", CheckStatus.PASS, detail)
                else:
                    report.add("formulas", f"b_t(G_{n},{m})", CheckStatus.INFO, f"{detail}, {agreement.value}")

    def _construction_cases(self, max_n: int):
        for n in range(4, max_n + 1):
            if n % 5 == 4:
                for cid in (ConstructionId.STRIPE_D, ConstructionId.STRIPE_DPRIME,
                            ConstructionId.ZIGZAG_D, ConstructionId.ZIGZAG_DPRIME):
                    yield cid, n, ConstructionParams()
        for n in range(2, max_n + 1):
            if n % 3 == 2:
                for i in range(1, n + 1):
                    yield ConstructionId.LADDER_VERTICAL, n, ConstructionParams(i=i)
                for i in range(1, n):
                    for row in (1, 2):
                        cid = (ConstructionId.LADDER_HORIZONTAL_SPLIT if i % 3 == 1
                               else ConstructionId.LADDER_HORIZONTAL)
                        yield cid, n, ConstructionParams(i=i, row=row)
            elif n % 3 == 1 and n >= 4:
                for i in range(1, n):
                    for j in range(i + 1, n + 1):
                        yield ConstructionId.LADDER_TWO_VERTICAL, n, ConstructionParams(i=i, j=j)

    def suite_constructions(self, report: CampaignReport, max_n: int):
        for cid, n, params in self._construction_cases(max_n):
            g = construction_graph(cid, n, params)
            d = construct(cid, n, params)
            expected = gamma_t_formula(n, cid.rows).value
            ok = is_total_dominating(g, d) and len(d) == expected
            label = f"{cid.value} n={n}" + (f" i={params.i}" if params.i else "")
            if params.j:
                label += f" j={params.j}"
            if cid in (ConstructionId.LADDER_HORIZONTAL_SPLIT, ConstructionId.LADDER_HORIZONTAL):
                label += f" row={params.row}"
            report.check("constructions", label, ok, f"|D|={len(d)}, expected {expected}")

    def suite_witnesses(self, report: CampaignReport, max_n: int):
        for m in range(1, 5):
            for n in range(m, max_n + 1):
                try:
                    record = witness_record(n, m)
                except NoneAvailable:
                    continue
                formula = bondage_formula(n, m)
                g = build_grid(GridSpec(n, m))
                ok = verify_witness(g, record.edges, config=self.config) and len(record.edges) == formula.value
                report.check("witnesses", f"G_{n},{m} {record.names}", ok,
                             f"{record.source.value}, bound {formula}")

    def suite_properties(self, report: CampaignReport, max_n: int):
        # Column push-down over DP witnesses.
        for m in (2, 3, 4):
            for n in range(2, min(max_n, 10) + 1):
                g = build_grid(GridSpec(n, m))
                d = self.gamma_t(g).witness
                ok = True
                for i in range(1, n):
                    cut = d.restrict_columns(i + 1)
                    if self.gamma_t(build_grid(GridSpec(i, m))).value > len(cut):
                        ok = False
                    if 2 <= i <= n - 1:
                        reduced = push_down(g, d, i)
                        if not is_total_dominating(build_grid(GridSpec(i, m)), reduced) or len(reduced) > len(cut):
                            ok = False
                report.check("properties", f"column cut G_{n},{m}", ok)

        # Deleting the first t columns leaves G_{n-t,m}.
        for m in (2, 3, 4):
            for n in range(2, min(max_n, 6) + 1):
                g = build_grid(GridSpec(n, m))
                bad = [t for t in range(1, n)
                       if not g.delete_columns(range(1, t + 1)).is_isomorphic_to(build_grid(GridSpec(n - t, m)))]
                report.check("properties", f"column deletion G_{n},{m}", not bad, f"t={bad}" if bad else "")

        # Deleting an end-column vertex of G_{n,2}, n = 1 (mod 3).
        for n in (4, 7, 10):
            if n > max_n:
                continue
            g = build_grid(GridSpec(n, 2))
            base = self.gamma_t(g).value
            for j in (1, 2):
                value = self.gamma_t(g.delete_vertices([Vertex(n, j)])).value
                report.check("properties", f"G_{n},2 - x_{n}{j}", value == base - 1, f"{base} -> {value}")

        # End columns of minimum sets of G_{n,3}.
        for n in range(3, min(max_n, 7) + 1):
            g = build_grid(GridSpec(n, 3))
            listing = enumerate_min_tds(g, cap=max(self.config["enumerate_cap"], 3 * n), config=self.config)
            first, last = g.column_mask(1), g.column_mask(n)
            ok = all((d.mask & first).bit_count() <= 2 and (d.mask & last).bit_count() <= 2 for d in listing.sets)
            report.check("properties", f"end columns G_{n},3", ok,
                         f"{len(listing)} minimum sets" + (" (truncated)" if listing.truncated else ""))

        # A corner vertex in the set forces n + 1 vertices.
        for n in range(3, min(max_n, 6) + 1):
            g = build_grid(GridSpec(n, 3))
            for j in (1, 3):
                required = VertexSet.of(g.spec, [Vertex(n, j)])
                value = gamma_t_bruteforce(g, required=required, config=self.config).value
                report.check("properties", f"G_{n},3 with x_{n}{j}", value >= n + 1, f"{value} >= {n + 1}")

    def suite_conjecture(self, report: CampaignReport, max_n: int):
        for row in run_conjecture_experiment(range(7, max_n + 1), config=self.config):
            report.add("conjecture", f"b_t(G_{row.n},4)", CheckStatus.INFO,
                       f"bound {row.upper_bound}, computed {row.result.status.value} {row.result}, tight={row.tight}")

    def _random_instance(self, max_n: int) -> GridGraph:
        dims = [(n, m) for n in range(1, min(max_n, 20) + 1) for m in range(1, 21) if n * m <= 20]
        n, m = dims[int(self.rng.integers(len(dims)))]
        g = build_grid(GridSpec(n, m))
        if g.live_count > 1 and self.rng.random() < 0.5:
            g = g.delete_vertices([g.spec.vertex_at(int(self.rng.integers(g.spec.vertex_count)))])
        edges = g.present_edges()
        count = int(self.rng.integers(0, min(3, len(edges)) + 1))
        if count:
            picks = self.rng.choice(len(edges), size=count, replace=False)
            g = g.remove_edges(edges[int(idx)] for idx in picks)
        return g

    def suite_oracle(self, report: CampaignReport, max_n: int):
        mismatches = []
        for _ in range(ORACLE_INSTANCES):
            g = self._random_instance(max_n)
            dp = gamma_t_dp(g, config=self.config)
            brute = gamma_t_bruteforce(g, config=self.config)
            witness_ok = dp.witness is None or (
                is_total_dominating(g, dp.witness) and len(dp.witness) == dp.value
            )
            if dp.value != brute.value or not witness_ok:
                mismatches.append(f"{g.describe()}: dp {dp}, brute {brute}")
        report.check("oracle", f"dp == bruteforce on {ORACLE_INSTANCES} instances (seed {self.seed})",
                     not mismatches, "; ".join(mismatches[:3]))

        for n in range(1, min(max_n, 16) + 1):
            for m in range(1, 17):
                if n * m > 16 or n * m < 2:
                    continue
                g = build_grid(GridSpec(n, m))
                gamma = gamma_bruteforce(g, config=self.config).value
                gamma_t = gamma_t_dp(g, config=self.config).value
                report.check("oracle", f"sandwich G_{n},{m}", gamma <= gamma_t <= 2 * gamma,
                             f"gamma={gamma}, gamma_t={gamma_t}")
                dropped = []
                for e in g.present_edges():
                    reduced = gamma_t_dp(g.remove_edges([e]), want_witness=False, config=self.config)
                    if reduced.value is not None and reduced.value < gamma_t:
                        dropped.append(e.name)
                report.check("oracle", f"monotone G_{n},{m}", not dropped, ", ".join(dropped))

    # ------------------------------------------------------------------
    # Tables
    # ------------------------------------------------------------------

    def table(self, m: int, n_from: int, n_to: int, k_max: Optional[int] = None) -> List[TableRow]:
        """
        Formula and solver values for G_{n,m}, n_from <= n <= n_to.

        The bondage search depth is k_max when given, otherwise the formula
        value for exact formulas and config["table_k_max"] elsewhere.
        """
        rows = []
        for n in range(n_from, n_to + 1):
            g = build_grid(GridSpec(n, m))
            runtimes = {}
            started = time.perf_counter()
            gamma = self.gamma_t(g)
            runtimes["gamma_t"] = time.perf_counter() - started

            formula = bondage_formula(n, m)
            result = None
            witness: List[str] = []
            if not gamma.is_undefined:
                depth = k_max or (formula.value if formula.is_exact else self.config["table_k_max"])
                started = time.perf_counter()
                result = self.bondage(g, depth)
                runtimes["b_t"] = time.perf_counter() - started
                if result.status is BondageStatus.EXACT:
                    witness = result.witness_names
                else:
                    try:
                        witness = witness_record(n, m, allow_search=False).names
                    except NoneAvailable:
                        pass
            rows.append(TableRow(n, m, gamma_t_formula(n, m), gamma, formula, result, witness, runtimes))
        return rows
