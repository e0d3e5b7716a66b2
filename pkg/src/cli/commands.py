"""
Command-line front end.

Subcommands: gamma, bondage, verify, render, table. Results go to stdout
(canonical JSON with --json); diagnostics go to stderr through logging.
Exit codes: 0 ok, 1 failed check, 2 usage or input error, 3 instance too
large.
"""

import sys
import argparse
import logging
from typing import Any, Callable, Dict, List, Optional

from .. import __version__
from ..formulas.closed_forms import bondage_formula
from ..formulas.witnesses import witness_record
from ..grid.grid_model import GridSpec, build_grid, parse_edges, parse_vertices
from ..utils.config import load_config
from ..utils.errors import (
    EXIT_ASSERT_FAIL, EXIT_OK, EXIT_USAGE, GridBondError, InvalidInput, NoneAvailable,
    exit_code_for
)
from .cache import ResultsCache, dumps
from .campaign import DEFAULT_SUITES, SUITE_ALIASES, SUITES, Campaign, bondage_payload, gamma_payload
from .render import RENDER_SETS, RENDER_VARIANTS, render, resolve_set
from .report import format_csv, format_table

logger = logging.getLogger(__name__)


def _names(text: Optional[str]) -> List[str]:
    return [part.strip() for part in (text or "").split(",") if part.strip()]


def _split_edges(text: Optional[str]) -> List[str]:
    # Edge names contain a comma ("H:5,1"); a new name starts at each prefix.
    if not text:
        return []
    names = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if names and part[:1].upper() not in ("H", "V"):
            names[-1] += "," + part
        else:
            names.append(part)
    return names


def _split_vertices(text: Optional[str]) -> List[str]:
    parts = _names(text)
    return [",".join(parts[k:k + 2]) for k in range(0, len(parts), 2)]


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_gamma(args: argparse.Namespace, campaign: Campaign) -> int:
    g = build_grid(GridSpec(args.n, args.m))
    g = g.delete_vertices(parse_vertices(_split_vertices(args.delete)))
    g = g.remove_edges(parse_edges(_split_edges(args.remove)))

    result = campaign.gamma_t(g, engine=args.engine)
    if args.json:
        _emit(dumps(gamma_payload(g, result)))
        return EXIT_OK

    _emit(f"gamma_t({g.describe()}) = {result}")
    if result.witness is not None:
        _emit(f"witness: {' '.join(result.witness.names())}")
    return EXIT_OK


def _default_k_max(n: int, m: int, config: Dict[str, Any]) -> int:
    formula = bondage_formula(n, m)
    if formula.is_unknown:
        return config["table_k_max"]
    return formula.value


def cmd_bondage(args: argparse.Namespace, campaign: Campaign) -> int:
    if args.kmax is not None and args.kmax < 1:
        raise InvalidInput(f"--kmax must be at least 1, got {args.kmax}")
    g = build_grid(GridSpec(args.n, args.m))
    k_max = args.kmax or _default_k_max(args.n, args.m, campaign.config)

    result = campaign.bondage(g, k_max, use_symmetry=not args.no_symmetry)
    formula = bondage_formula(args.n, args.m)
    try:
        formula_witness = witness_record(args.n, args.m, allow_search=False).names
    except NoneAvailable:
        formula_witness = None

    if args.json:
        payload = bondage_payload(g, result)
        payload["formula"] = formula.to_dict()
        payload["formula_witness"] = formula_witness
        _emit(dumps(payload))
        return EXIT_OK

    _emit(f"b_t({g.describe()}) = {result} ({result.status.value})")
    if result.witness:
        _emit(f"witness: {' '.join(result.witness_names)}")
    _emit(f"formula: {formula}")
    if formula_witness:
        _emit(f"formula witness: {' '.join(formula_witness)}")
    stats = result.stats.to_dict()
    _emit("stats: " + ", ".join(f"{key}={value}" for key, value in stats.items()))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, campaign: Campaign) -> int:
    suites = list(DEFAULT_SUITES) if args.suite == "all" else [args.suite]
    report = campaign.run(suites, args.max_n)
    _emit(dumps(report.to_dict()) if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_ASSERT_FAIL


def cmd_render(args: argparse.Namespace, campaign: Campaign) -> int:
    d = resolve_set(args.n, args.m, args.set, args.variant, campaign.config)
    _emit(render(d))
    return EXIT_OK


def cmd_table(args: argparse.Namespace, campaign: Campaign) -> int:
    rows = campaign.table(args.m, args.n_from, args.n_to, args.kmax)
    if args.format == "csv":
        _emit(format_csv(rows))
    elif args.format == "json":
        _emit(dumps([row.to_dict() for row in rows]))
    else:
        _emit(format_table(rows))
    return EXIT_OK if all(row.agreement_flag for row in rows) else EXIT_ASSERT_FAIL


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser for all subcommands."""
    parser = argparse.ArgumentParser(
        prog="gridbond",
        description="Exact total domination and total bondage numbers of grid graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("--no-cache", action="store_true", help="Neither read nor write the results cache")
    parser.add_argument("--seed", type=int, help="Seed for randomized suites")
    parser.add_argument("--workers", type=int, help="Worker processes for bondage searches")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    gamma = sub.add_parser("gamma", help="Total domination number of a grid")
    gamma.add_argument("n", type=int)
    gamma.add_argument("m", type=int)
    gamma.add_argument("--remove", help="Removed edges, e.g. H:5,1,V:2,1")
    gamma.add_argument("--delete", help="Deleted vertices, e.g. 3,1,4,2")
    gamma.add_argument("--engine", choices=("dp", "brute"), default="dp")
    gamma.add_argument("--json", action="store_true")
    gamma.set_defaults(handler=cmd_gamma)

    bondage = sub.add_parser("bondage", help="Total bondage number of a grid")
    bondage.add_argument("n", type=int)
    bondage.add_argument("m", type=int)
    bondage.add_argument("--kmax", type=int, help="Largest edge subset searched")
    bondage.add_argument("--no-symmetry", action="store_true", help="Search every subset, not one per orbit")
    bondage.add_argument("--json", action="store_true")
    bondage.set_defaults(handler=cmd_bondage)

    verify = sub.add_parser("verify", help="Run verification suites")
    verify.add_argument("--suite", choices=SUITES + tuple(SUITE_ALIASES) + ("all",), default="all")
    verify.add_argument("--max-n", type=int, default=10)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    render_cmd = sub.add_parser("render", help="Draw a vertex set")
    render_cmd.add_argument("n", type=int)
    render_cmd.add_argument("m", type=int)
    render_cmd.add_argument("--set", choices=RENDER_SETS, default="solver")
    render_cmd.add_argument("--variant", choices=RENDER_VARIANTS, default="d")
    render_cmd.set_defaults(handler=cmd_render)

    table = sub.add_parser("table", help="Formula and solver values for a range of n")
    table.add_argument("--m", type=int, required=True)
    table.add_argument("--n-from", type=int, required=True)
    table.add_argument("--n-to", type=int, required=True)
    table.add_argument("--kmax", type=int, help="Bondage search depth for every row")
    table.add_argument("--format", choices=("csv", "json", "text"), default="text")
    table.set_defaults(handler=cmd_table)

    return parser


def run(argv: Optional[List[str]] = None, config: Optional[Dict[str, Any]] = None) -> int:
    """
    Parse arguments and run one subcommand.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].
        config: Effective configuration; loaded from --config when None.

    Returns:
        int: The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    if config is None:
        config = load_config(args.config)
    config = dict(config)
    if args.workers is not None:
        config["workers"] = args.workers

    cache = ResultsCache.from_config(config, enabled=False if args.no_cache else None)
    campaign = Campaign(config, cache, seed=args.seed)
    handler: Callable[[argparse.Namespace, Campaign], int] = args.handler

    try:
        return handler(args, campaign)
    except GridBondError as e:
        logger.debug(f"{args.command} failed: {e}", exc_info=True)
        sys.stderr.write(f"Error: {e}\n")
        return exit_code_for(e)
    except Exception as e:
        logger.error(f"An unexpected error occurred: {e}", exc_info=True)
        sys.stderr.write(f"Error: An unexpected error occurred: {e}\n")
        return EXIT_ASSERT_FAIL
