"""
Tests for the results cache.
"""

import os
import json
import shutil
import tempfile
import unittest

from src.cli.cache import CacheRecord, ResultsCache, cache_key, dumps
from src.grid.grid_model import Edge, GridSpec, Vertex, build_grid


class TestCacheRecord(unittest.TestCase):
    """Tests for the CacheRecord class."""

    def test_from_dict(self):
        """Test that from_dict creates a record correctly."""
        data = {
            "n": 6,
            "m": 2,
            "removed": ["H:5,1"],
            "deleted": [],
            "operation": "gamma_t:dp",
            "value": {"gamma_t": 5},
            "version": "0.1.0",
        }
        record = CacheRecord.from_dict(data)
        self.assertEqual(record.key, (6, 2, ("H:5,1",), (), "gamma_t:dp"))
        self.assertEqual(record.to_dict(), data)

    def test_from_dict_missing_fields(self):
        """Test that from_dict rejects incomplete records."""
        with self.assertRaises(ValueError):
            CacheRecord.from_dict({"n": 1, "m": 2})

    def test_for_graph(self):
        """Test that graph records sort their edge and vertex names."""
        g = build_grid(GridSpec(4, 3)).remove_edges([Edge.vertical(2, 1), Edge.horizontal(3, 1)])
        g = g.delete_vertices([Vertex(1, 1)])
        record = CacheRecord.for_graph(g, "gamma_t:dp", {})
        self.assertEqual(record.removed, ["H:3,1", "V:2,1"])
        self.assertEqual(record.deleted, ["1,1"])
        self.assertEqual(record.key, cache_key(g, "gamma_t:dp"))


class TestResultsCache(unittest.TestCase):
    """Tests for the ResultsCache class."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.cache_dir = os.path.join(self.temp_dir, "cache")
        self.g = build_grid(GridSpec(6, 2))

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_put_and_get(self):
        """Test that stored results survive a reload."""
        cache = ResultsCache(self.cache_dir)
        self.assertIsNone(cache.get(self.g, "gamma_t:dp"))
        cache.put(self.g, "gamma_t:dp", {"gamma_t": 4})
        self.assertEqual(cache.get(self.g, "gamma_t:dp"), {"gamma_t": 4})

        reloaded = ResultsCache(self.cache_dir)
        self.assertEqual(reloaded.get(self.g, "gamma_t:dp"), {"gamma_t": 4})
        self.assertEqual(len(reloaded), 1)
        self.assertTrue(reloaded.path.name.startswith("results-v"))

    def test_keys_distinguish_graphs(self):
        """Test that removed edges and operations are part of the key."""
        cache = ResultsCache(self.cache_dir)
        cache.put(self.g, "gamma_t:dp", {"gamma_t": 4})
        reduced = self.g.remove_edges([Edge.horizontal(5, 1)])
        self.assertIsNone(cache.get(reduced, "gamma_t:dp"))
        self.assertIsNone(cache.get(self.g, "gamma_t:brute"))

    def test_disabled(self):
        """Test that a disabled cache neither reads nor writes."""
        cache = ResultsCache(self.cache_dir, enabled=False)
        cache.put(self.g, "gamma_t:dp", {"gamma_t": 4})
        self.assertIsNone(cache.get(self.g, "gamma_t:dp"))
        self.assertFalse(os.path.exists(self.cache_dir))

    def test_corrupt_lines_are_skipped(self):
        """Test that unreadable lines do not break loading."""
        cache = ResultsCache(self.cache_dir)
        cache.put(self.g, "gamma_t:dp", {"gamma_t": 4})
        with open(cache.path, "a", encoding="utf-8") as f:
            f.write("{not json\n")
            f.write(json.dumps({"n": 1}) + "\n")
        with self.assertLogs("src.cli.cache", level="WARNING"):
            reloaded = ResultsCache(self.cache_dir)
            self.assertEqual(len(reloaded), 1)

    def test_other_versions_are_ignored(self):
        """Test that records from another version are not served."""
        old = ResultsCache(self.cache_dir, version="0.0.1")
        old.put(self.g, "gamma_t:dp", {"gamma_t": 99})
        os.rename(old.path, ResultsCache(self.cache_dir).path)
        self.assertIsNone(ResultsCache(self.cache_dir).get(self.g, "gamma_t:dp"))

    def test_from_config(self):
        """Test building a cache from configuration."""
        cache = ResultsCache.from_config({"cache_dir": self.cache_dir, "cache_enabled": False})
        self.assertFalse(cache.enabled)
        cache = ResultsCache.from_config({"cache_dir": self.cache_dir}, enabled=True)
        self.assertTrue(cache.enabled)


class TestDumps(unittest.TestCase):
    """Tests for canonical JSON output."""

    def test_sorted_keys(self):
        self.assertEqual(dumps({"b": 1, "a": 2}), '{"a": 2, "b": 1}')


if __name__ == "__main__":
    unittest.main()
