"""
Append-only results cache.

Each computed result is stored as one JSON object per line in
results-v<version>.jsonl under the cache directory. A version bump starts a
new file, so stale results are never read. Lines that fail to parse are
skipped with a warning.
"""

import os
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Tuple

from .. import __version__
from ..grid.grid_model import GridGraph

logger = logging.getLogger(__name__)

CacheKey = Tuple[int, int, Tuple[str, ...], Tuple[str, ...], str]


def dumps(payload: Any) -> str:
    """Canonical JSON text shared by stdout and the cache file."""
    return json.dumps(payload, sort_keys=True)


def cache_key(g: GridGraph, operation: str) -> CacheKey:
    return (
        g.n,
        g.m,
        tuple(sorted(e.name for e in g.removed_edges)),
        tuple(sorted(v.name for v in g.deleted_vertices)),
        operation,
    )


class CacheRecord:
    """
    One cached result.

    The key is (n, m, sorted removed-edge names, sorted deleted-vertex
    names, operation); value is the JSON payload the command prints.
    """

    def __init__(
        self,
        n: int,
        m: int,
        removed: Iterable[str],
        deleted: Iterable[str],
        operation: str,
        value: Dict[str, Any],
        version: str = __version__,
    ):
        self.n = n
        self.m = m
        self.removed = sorted(removed)
        self.deleted = sorted(deleted)
        self.operation = operation
        self.value = value
        self.version = version

    @classmethod
    def for_graph(cls, g: GridGraph, operation: str, value: Dict[str, Any]) -> "CacheRecord":
        n, m, removed, deleted, operation = cache_key(g, operation)
        return cls(n, m, removed, deleted, operation, value)

    @property
    def key(self) -> CacheKey:
        return (self.n, self.m, tuple(self.removed), tuple(self.deleted), self.operation)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CacheRecord":
        """
        Create a CacheRecord from a parsed cache line.

        Raises:
            ValueError: If the dictionary is missing required fields.
        """
        required_fields = ["n", "m", "operation", "value", "version"]
        for field in required_fields:
            if field not in data:
                raise ValueError(f"Missing required field: {field}")

        return cls(
            n=data["n"],
            m=data["m"],
            removed=data.get("removed", []),
            deleted=data.get("deleted", []),
            operation=data["operation"],
            value=data["value"],
            version=data["version"],
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "removed": self.removed,
            "deleted": self.deleted,
            "operation": self.operation,
            "value": self.value,
            "version": self.version,
        }


class ResultsCache:
    """Line-delimited JSON cache keyed by CacheRecord.key."""

    def __init__(self, cache_dir: str, enabled: bool = True, version: str = __version__):
        """
        Initialize the cache.

        Args:
            cache_dir: Directory holding the cache file; created on first write.
            enabled: When False every lookup misses and nothing is written.
            version: Tool version; part of the file name.
        """
        self.cache_dir = Path(os.path.expanduser(cache_dir))
        self.enabled = enabled
        self.version = version
        self.path = self.cache_dir / f"results-v{version}.jsonl"
        self._records: Optional[Dict[CacheKey, CacheRecord]] = None

    @classmethod
    def from_config(cls, config: Dict[str, Any], enabled: Optional[bool] = None) -> "ResultsCache":
        if enabled is None:
            enabled = config.get("cache_enabled", True)
        return cls(config.get("cache_dir", "~/.gridbond/cache"), enabled)

    def _load(self) -> Dict[CacheKey, CacheRecord]:
        if self._records is not None:
            return self._records

        records: Dict[CacheKey, CacheRecord] = {}
        if self.path.exists():
            try:
                with open(self.path, "r", encoding="utf-8") as f:
                    for number, line in enumerate(f, start=1):
                        line = line.strip()
                        if not line:
                            continue
                        try:
                            record = CacheRecord.from_dict(json.loads(line))
                        except (ValueError, TypeError) as e:
                            logger.warning(f"Skipping corrupt cache line {number} in {self.path}: {e}")
                            continue
                        if record.version != self.version:
                            continue
                        records[record.key] = record
            except OSError as e:
                logger.warning(f"Could not read cache file {self.path}: {e}")
        self._records = records
        logger.debug(f"Loaded {len(records)} cached results from {self.path}")
        return records

    def get(self, g: GridGraph, operation: str) -> Optional[Dict[str, Any]]:
        """Cached payload for (g, operation), or None on a miss."""
        if not self.enabled:
            return None
        record = self._load().get(cache_key(g, operation))
        if record is None:
            logger.debug(f"Cache miss: {g.describe()} {operation}")
            return None
        logger.info(f"Cache hit: {g.describe()} {operation}")
        return record.value

    def put(self, g: GridGraph, operation: str, value: Dict[str, Any]):
        """Append a result; a failed write is logged and ignored."""
        if not self.enabled:
            return
        record = CacheRecord.for_graph(g, operation, value)
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(dumps(record.to_dict()) + "\n")
        except OSError as e:
            logger.warning(f"Could not write cache file {self.path}: {e}")
            return
        self._load()[record.key] = record

    def __len__(self) -> int:
        return len(self._load())
