from dataclasses import fields
import unittest

from cyclosum.config import Settings


class TestSettings(unittest.TestCase):
    def test_defaults(self):
        settings = Settings.resolve(environ={})
        self.assertIsNone(settings.cache_dir)
        self.assertEqual(1, settings.jobs)
        self.assertEqual(["cache_dir", "jobs"],
                         [field.name for field in fields(settings)])
        self.assertFalse(hasattr(settings, "__dict__"))

    def test_environment(self):
        environ = {
            "CYCLOSUM_CACHE_DIR": "/tmp/cyclosum",
            "CYCLOSUM_JOBS": "4",
        }
        settings = Settings.resolve(environ=environ)
        self.assertEqual("/tmp/cyclosum", settings.cache_dir)
        self.assertEqual(4, settings.jobs)

    def test_flags_win(self):
        environ = {"CYCLOSUM_CACHE_DIR": "/tmp/env", "CYCLOSUM_JOBS": "4"}
        settings = Settings.resolve(cache_dir="/tmp/flag", jobs=2,
                                    environ=environ)
        self.assertEqual("/tmp/flag", settings.cache_dir)
        self.assertEqual(2, settings.jobs)

    def test_bad_values(self):
        settings = Settings.resolve(environ={
            "CYCLOSUM_CACHE_DIR": "",
            "CYCLOSUM_JOBS": "many"
        })
        self.assertIsNone(settings.cache_dir)
        self.assertEqual(1, settings.jobs)
        self.assertEqual(1, Settings.resolve(jobs=0, environ={}).jobs)


if __name__ == "__main__":
    unittest.main()
