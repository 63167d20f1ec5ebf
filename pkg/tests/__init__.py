from typing import Any, Dict, Sequence
import io
import json
import os
import unittest

from cyclosum.cli import run

__all__ = ["TestCliBase", "GOLDEN_DIR", "SCHEMA_PATH", "slow_test"]

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GOLDEN_DIR = os.path.join(ROOT_DIR, "tests", "golden")
SCHEMA_PATH = os.path.join(ROOT_DIR, "docs", "report.schema.json")

slow_test = unittest.skipUnless(os.getenv("CYCLOSUM_SLOW_TESTS"),
                                "set CYCLOSUM_SLOW_TESTS to run")


class TestCliBase(unittest.TestCase):
    def do_test(self, argv: Sequence[str], expected_code: int = 0) -> str:
        stdout = io.StringIO()
        code = run(list(argv), stdout=stdout)
        output = stdout.getvalue()
        self.assertEqual(expected_code, code, output)
        return output

    def do_test_json(self,
                     argv: Sequence[str],
                     expected_code: int = 0) -> Dict[str, Any]:
        output = self.do_test(
            list(argv) + ["--format", "json", "--no-timing"], expected_code)
        return json.loads(output)

    def do_test_exception(self, argv: Sequence[str],
                          expected_type: str) -> Dict[str, Any]:
        report = self.do_test_json(argv, 1)
        self.assertNotIn("result", report)
        self.assertEqual(expected_type, report["error"]["type"])
        return report
