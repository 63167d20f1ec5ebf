from dataclasses import replace
from unittest import mock
import io
import json
import os
import tempfile
import unittest

from cyclosum import __version__
from cyclosum.cli import run
from cyclosum.transform import verify_theorem_2pq

from . import GOLDEN_DIR, SCHEMA_PATH, TestCliBase

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None


class TestTextReports(TestCliBase):
    def test_cyclo(self):
        self.assertEqual("x^8+x^7-x^5-x^4-x^3+x+1\n", self.do_test(["cyclo", "30"]))

    def test_scalars(self):
        self.assertEqual("8\n", self.do_test(["phi", "30"]))
        self.assertEqual("-1\n", self.do_test(["mobius", "30"]))
        self.assertEqual("2\n", self.do_test(["height", "105"]))
        self.assertEqual("false\n", self.do_test(["flat", "105"]))
        self.assertEqual("true\n", self.do_test(["flat", "30"]))

    def test_lamleung(self):
        expected = "r=1 s=1\nA={0,8}\nB={3,5}\nC={4}\nD={1,7}\nreconstructs=true\n"
        self.assertEqual(expected, self.do_test(["lamleung", "3", "5"]))

    def test_gaps(self):
        expected = ("gaps=1,6,1,10,1,1\n"
                    "max_gap=10\n"
                    "expected_max_gap=10 bound=8 passed=true\n")
        self.assertEqual(expected, self.do_test(["gaps", "30"]))
        self.assertEqual("gaps=2,2,2,2,2,2\nmax_gap=2\n",
                         self.do_test(["gaps", "14"]))

    def test_theorem2pq(self):
        expected = ("expected_degree=20 degree_at_0=20 degree_at_12=20\n"
                    "minimizing_shifts=0,12\n"
                    "passed=true\n")
        self.assertEqual(expected, self.do_test(["theorem2pq", "3", "5"]))

    def test_enumerate(self):
        expected = ("{0,3} weight=2 degree=3 orbit=3\n"
                    "{0,2,4} weight=3 degree=4 orbit=2\n"
                    "classes=2\n")
        self.assertEqual(expected, self.do_test(["enumerate", "6"]))

    def test_search(self):
        lines = self.do_test(["search", "30", "--max-degree", "20"]).splitlines()
        self.assertIn("x^20+x^10+1", lines)
        self.assertIn("x^20+x^19+x^18+x^8+x^7+x+1", lines)
        self.assertEqual([
            "lowest_degree=20",
            'verdict match=true, winners=["g1","phiT"]',
            "predicted=20 observed=20",
        ], lines[-3:])

    def test_search_without_verdict(self):
        self.assertEqual("x^4+x^2+1\nlowest_degree=4\n",
                         self.do_test(["search", "6"]))

    def test_verify_conjecture(self):
        lines = self.do_test(["verify-conjecture", "3", "5"]).splitlines()
        self.assertEqual('verdict match=true, winners=["g1","phiT"]', lines[0])
        self.assertEqual("predicted=20 observed=20", lines[1])

    def test_lemma_s(self):
        self.assertEqual("{0,2,4,6,8,10,12} s=6\nchecked=1 passed=true\n",
                         self.do_test(["lemma-s", "14"]))


class TestJsonReports(TestCliBase):
    def test_envelope(self):
        report = self.do_test_json(["cyclo", "30"])
        self.assertEqual("cyclo", report["command"])
        self.assertEqual({"n": 30}, report["parameters"])
        self.assertEqual(__version__, report["tool_version"])
        self.assertEqual(8, report["result"]["degree"])
        self.assertEqual([1, 1, 0, -1, -1, -1, 0, 1, 1],
                         report["result"]["polynomial"]["coeffs"])
        self.assertNotIn("exponents", report["result"]["polynomial"])
        self.assertNotIn("elapsed_ms", report)
        self.assertNotIn("cached", report)

    def test_timing(self):
        output = self.do_test(["phi", "30", "--format", "json"])
        self.assertIn("elapsed_ms", json.loads(output))
        output = self.do_test(["phi", "30", "--format", "json", "--no-timing"])
        self.assertNotIn("elapsed_ms", json.loads(output))

    def test_sorted_keys(self):
        output = self.do_test(["phi", "30", "--format", "json", "--no-timing"])
        report = json.loads(output)
        self.assertEqual(json.dumps(report, sort_keys=True, indent=2) + "\n",
                         output)

    def test_transform(self):
        result = self.do_test_json(["transform", "30"])["result"]
        self.assertEqual([0, 1, 7, 8, 18, 19, 20],
                         result["polynomial"]["exponents"])
        self.assertEqual(20, result["degree"])
        self.assertEqual(20, result["predicted_degree"])
        self.assertEqual(7, result["terms"])
        self.assertTrue(result["minimal"])
        self.assertTrue(result["passed"])

    def test_theorem2pq(self):
        result = self.do_test_json(["theorem2pq", "3", "5"])["result"]
        self.assertEqual([0, 12], result["minimizing_shifts"])
        self.assertEqual([], result["counterexamples"])
        self.assertEqual(12, result["twin_shift"])
        self.assertTrue(result["passed"])

    def test_lamleung(self):
        result = self.do_test_json(["lamleung", "3", "7"])["result"]
        self.assertEqual((4, 0), (result["r"], result["s"]))
        self.assertEqual({"phi_pq": True, "phi_2pq": True, "phi_T": True},
                         result["checks"])

    def test_enumerate_parameters(self):
        report = self.do_test_json(["enumerate", "14", "--max-weight", "6"])
        self.assertEqual({"n": 14, "max_weight": 6}, report["parameters"])
        self.assertEqual(1, report["result"]["count"])
        self.assertEqual([0, 7], report["result"]["classes"][0]["exponents"])

    def test_verify_conjecture(self):
        result = self.do_test_json(["verify-conjecture", "3", "7"])["result"]
        self.assertEqual(28, result["predicted_degree"])
        self.assertEqual(["g1"], result["expected_winners"])
        self.assertTrue(result["match"])
        self.assertTrue(result["passed"])

    def test_jobs_deterministic(self):
        argv = ["search", "30", "--max-degree", "22"]
        single = self.do_test_json(argv + ["--jobs", "1"])
        pooled = self.do_test_json(argv + ["--jobs", "2"])
        self.assertEqual(single, pooled)

    def test_failed_verification(self):
        failed = replace(verify_theorem_2pq(3, 5), passed=False)
        with mock.patch("cyclosum.cli.verify_theorem_2pq",
                        return_value=failed):
            result = self.do_test_json(["theorem2pq", "3", "5"], 2)["result"]
        self.assertFalse(result["passed"])


class TestErrors(TestCliBase):
    def test_invalid_input(self):
        self.do_test_exception(["cyclo", "0"], "invalid-input")
        self.do_test_exception(["cyclo", "abc"], "invalid-input")
        self.do_test_exception(["frobnicate", "3"], "invalid-input")
        self.do_test_exception([], "invalid-input")
        self.do_test_exception(["transform", "7"], "invalid-input")
        self.do_test_exception(["lemma-s", "7"], "invalid-input")
        self.do_test_exception(["lamleung", "5", "3"], "invalid-input")

    def test_not_flat(self):
        report = self.do_test_exception(["transform", "210"], "not-flat")
        self.assertEqual({"n": 210}, report["parameters"])

    def test_too_large(self):
        self.do_test_exception(["enumerate", "50"], "instance-too-large")
        self.do_test_exception(["verify-conjecture", "3", "41"],
                               "instance-too-large")

    def test_text_error(self):
        output = self.do_test(["transform", "210"], 1)
        self.assertTrue(output.startswith("error: not-flat: "), output)
        output = self.do_test(["cyclo", "abc"], 1)
        self.assertTrue(output.startswith("error: invalid-input: "), output)


class TestGolden(TestCliBase):
    def golden(self, name):
        path = os.path.join(GOLDEN_DIR, name)
        with open(path, "r", encoding="utf-8") as f:
            return f.read()

    def test_text(self):
        for command in ("cyclo", "transform"):
            for n in (6, 14, 30):
                expected = self.golden(f"{command}_{n}.txt")
                for jobs in ("1", "8"):
                    argv = [command, str(n), "--jobs", jobs]
                    self.assertEqual(expected, self.do_test(argv), argv)

    def test_json(self):
        for command in ("enumerate", "search", "lemma-s"):
            for n in (6, 14):
                expected = self.golden(f"{command}_{n}.json")
                for jobs in ("1", "8"):
                    argv = [command, str(n), "--jobs", jobs, "--format",
                            "json", "--no-timing"]
                    self.assertEqual(expected, self.do_test(argv), argv)

    def test_json_thirty(self):
        reports = {}
        for command in ("enumerate", "search", "lemma-s"):
            outputs = [
                self.do_test([command, "30", "--jobs", jobs, "--format",
                              "json", "--no-timing"]) for jobs in ("1", "8")
            ]
            self.assertEqual(outputs[0], outputs[1], command)
            reports[command] = json.loads(outputs[0])["result"]

        self.assertEqual(9, reports["enumerate"]["count"])
        self.assertEqual(20, reports["search"]["lowest_degree"])
        self.assertTrue(reports["search"]["conjecture"]["match"])
        self.assertTrue(reports["lemma-s"]["passed"])
        self.assertEqual([], reports["lemma-s"]["violations"])


class TestCache(TestCliBase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.argv = ["enumerate", "12", "--cache-dir", self.directory.name]

    def test_replay(self):
        fresh = self.do_test_json(self.argv)
        self.assertNotIn("cached", fresh)
        self.assertTrue(os.listdir(self.directory.name))

        replayed = self.do_test_json(self.argv)
        self.assertIs(True, replayed.pop("cached"))
        self.assertEqual(fresh, replayed)

        self.assertEqual(self.do_test(["enumerate", "12"]),
                         self.do_test(self.argv))

    def test_uncached_command(self):
        self.do_test_json(["cyclo", "30", "--cache-dir", self.directory.name])
        self.assertEqual([], os.listdir(self.directory.name))

    def test_corrupt_entry(self):
        fresh = self.do_test_json(self.argv)
        for name in os.listdir(self.directory.name):
            with open(os.path.join(self.directory.name, name), "w") as f:
                f.write("{not json")
        again = self.do_test_json(self.argv)
        self.assertNotIn("cached", again)
        self.assertEqual(fresh, again)

    def test_entry_not_an_object(self):
        fresh = self.do_test_json(self.argv)
        for name in os.listdir(self.directory.name):
            with open(os.path.join(self.directory.name, name), "w") as f:
                f.write("[1, 2]")
        again = self.do_test_json(self.argv)
        self.assertNotIn("cached", again)
        self.assertEqual(fresh, again)

    def test_unusable_directory(self):
        blocker = os.path.join(self.directory.name, "blocker")
        with open(blocker, "w") as f:
            f.write("not a directory")
        argv = ["enumerate", "12", "--cache-dir", os.path.join(blocker, "sub")]
        report = self.do_test_json(argv)
        self.assertNotIn("cached", report)
        self.assertEqual(self.do_test_json(["enumerate", "12"]), report)
        self.assertEqual(self.do_test(["enumerate", "12"]), self.do_test(argv))


@unittest.skipIf(jsonschema is None, "jsonschema is not installed")
class TestSchema(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
            cls.schema = json.load(f)

    def check(self, argv, expected_code=0):
        stdout = io.StringIO()
        code = run(list(argv) + ["--format", "json"], stdout=stdout)
        self.assertEqual(expected_code, code)
        jsonschema.validate(json.loads(stdout.getvalue()), self.schema)

    def test_results(self):
        for argv in (["cyclo", "30"], ["phi", "30"], ["mobius", "12"],
                     ["height", "105"], ["flat", "105"], ["transform", "30"],
                     ["lamleung", "3", "5"], ["gaps", "30"],
                     ["theorem2pq", "3", "5"], ["enumerate", "12"],
                     ["search", "30", "--max-degree", "20"],
                     ["verify-conjecture", "3", "5"], ["lemma-s", "14"]):
            self.check(argv)

    def test_errors(self):
        self.check(["cyclo", "0"], 1)
        self.check(["cyclo", "abc"], 1)
        self.check(["transform", "210"], 1)


if __name__ == "__main__":
    unittest.main()
