import json
import unittest

from cyclosum.exception import (
    CyclosumException,
    InstanceTooLargeException,
    InvalidInputException,
    NotFlatException,
    TooFewExponentsException,
)
from cyclosum.polynomial import IntPolynomial
from cyclosum.report import ReportEnvelope, error_type, polynomial_payload


class TestErrorType(unittest.TestCase):
    def test_error_type(self):
        self.assertEqual("invalid-input", error_type(InvalidInputException()))
        self.assertEqual("too-few-exponents",
                         error_type(TooFewExponentsException()))
        self.assertEqual("not-flat", error_type(NotFlatException()))
        self.assertEqual("instance-too-large",
                         error_type(InstanceTooLargeException()))
        self.assertEqual("error", error_type(CyclosumException()))


class TestEnvelope(unittest.TestCase):
    def test_polynomial_payload(self):
        self.assertEqual({"coeffs": [1, 0, 1], "exponents": [0, 2]},
                         polynomial_payload(IntPolynomial((1, 0, 1))))
        self.assertEqual({"coeffs": [1, -1, 1]},
                         polynomial_payload(IntPolynomial((1, -1, 1))))

    def test_to_dict(self):
        envelope = ReportEnvelope("phi", {"n": 30}, "0.1.0",
                                  result={"n": 30, "phi": 8},
                                  elapsed_ms=3)
        self.assertEqual(3, envelope.to_dict()["elapsed_ms"])
        data = envelope.to_dict(timing=False)
        self.assertEqual({
            "command": "phi",
            "parameters": {"n": 30},
            "tool_version": "0.1.0",
            "result": {"n": 30, "phi": 8},
        }, data)
        self.assertEqual(data, json.loads(envelope.to_json(timing=False)))
        self.assertTrue(envelope.passed)

    def test_error(self):
        envelope = ReportEnvelope("cyclo", {"n": 0}, "0.1.0",
                                  error={
                                      "type": "invalid-input",
                                      "message": "bad n"
                                  })
        self.assertNotIn("result", envelope.to_dict())
        self.assertEqual("error: invalid-input: bad n\n", envelope.to_text())

    def test_passed(self):
        envelope = ReportEnvelope("gaps", {"n": 30}, "0.1.0",
                                  result={"passed": False})
        self.assertFalse(envelope.passed)

    def test_cached(self):
        envelope = ReportEnvelope("phi", {"n": 6}, "0.1.0",
                                  result={"n": 6, "phi": 2},
                                  cached=True)
        self.assertIs(True, envelope.to_dict()["cached"])
        self.assertEqual("2\n", envelope.to_text())


if __name__ == "__main__":
    unittest.main()
