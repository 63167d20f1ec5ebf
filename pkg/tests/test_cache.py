import json
import os
import tempfile
import unittest

from cyclosum.cache import ResultCache


class TestResultCache(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.cache = ResultCache(os.path.join(self.directory.name, "cache"),
                                 "0.1.0")

    def test_roundtrip(self):
        self.assertIsNone(self.cache.get("enumerate", {"n": 6}))
        self.cache.put("enumerate", {"n": 6}, {"count": 2})
        self.assertEqual({"count": 2}, self.cache.get("enumerate", {"n": 6}))
        self.assertIsNone(self.cache.get("enumerate", {"n": 10}))

    def test_key(self):
        key = self.cache.key("search", {"n": 30, "max_degree": 20})
        self.assertEqual(key, self.cache.key("search", {"max_degree": 20, "n": 30}))
        self.assertNotEqual(key, self.cache.key("search", {"n": 30, "max_degree": 21}))
        other = ResultCache(self.cache.directory, "0.2.0")
        self.assertNotEqual(key, other.key("search", {"n": 30, "max_degree": 20}))

    def test_version_mismatch(self):
        self.cache.put("enumerate", {"n": 6}, {"count": 2})
        path = self.cache.path("enumerate", {"n": 6})
        with open(path, "r", encoding="utf-8") as f:
            entry = json.load(f)
        entry["tool_version"] = "0.0.1"
        with open(path, "w", encoding="utf-8") as f:
            json.dump(entry, f)
        with self.assertLogs("cyclosum.cache", level="WARNING"):
            self.assertIsNone(self.cache.get("enumerate", {"n": 6}))

    def test_unreadable(self):
        self.cache.put("enumerate", {"n": 6}, {"count": 2})
        with open(self.cache.path("enumerate", {"n": 6}), "w") as f:
            f.write("[1, 2")
        with self.assertLogs("cyclosum.cache", level="WARNING"):
            self.assertIsNone(self.cache.get("enumerate", {"n": 6}))

    def test_not_an_object(self):
        self.cache.put("enumerate", {"n": 6}, {"count": 2})
        with open(self.cache.path("enumerate", {"n": 6}), "w") as f:
            f.write("[1, 2]")
        with self.assertLogs("cyclosum.cache", level="WARNING"):
            self.assertIsNone(self.cache.get("enumerate", {"n": 6}))

    def test_unwritable(self):
        blocker = os.path.join(self.directory.name, "blocker")
        with open(blocker, "w") as f:
            f.write("not a directory")
        cache = ResultCache(os.path.join(blocker, "sub"), "0.1.0")
        with self.assertLogs("cyclosum.cache", level="WARNING"):
            cache.put("enumerate", {"n": 6}, {"count": 2})
        self.assertIsNone(cache.get("enumerate", {"n": 6}))
        self.assertEqual(["blocker"], os.listdir(self.directory.name))

    def test_no_leftovers(self):
        self.cache.put("lemma-s", {"n": 14}, {"passed": True})
        names = os.listdir(self.cache.directory)
        self.assertEqual(1, len(names))
        self.assertTrue(names[0].startswith("lemma-s-"))
        self.assertTrue(names[0].endswith(".json"))


if __name__ == "__main__":
    unittest.main()
