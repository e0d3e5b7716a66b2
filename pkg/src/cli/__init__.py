"""
gridbond command-line harness: commands, campaigns, results cache and
rendering.
"""

from .cache import CacheRecord, ResultsCache, cache_key, dumps
from .report import (
    Agreement, CheckStatus, CheckResult, TableRow, CampaignReport,
    gamma_agreement, bondage_agreement, format_table, format_csv
)
from .render import render, resolve_set
from .campaign import SUITES, Campaign
from .commands import build_parser, run

__all__ = [
    "CacheRecord",
    "ResultsCache",
    "cache_key",
    "dumps",
    "Agreement",
    "CheckStatus",
    "CheckResult",
    "TableRow",
    "CampaignReport",
    "gamma_agreement",
    "bondage_agreement",
    "format_table",
    "format_csv",
    "render",
    "resolve_set",
    "SUITES",
    "Campaign",
    "build_parser",
    "run",
]
