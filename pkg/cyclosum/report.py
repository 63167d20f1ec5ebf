"""Module for report envelopes and their JSON and text renderings."""

from dataclasses import dataclass
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Optional,
)
import json

from . import exception
from .polynomial import IntPolynomial

__all__ = [
    "ReportEnvelope",
    "error_type",
    "polynomial_payload",
    "render_text",
]

Payload = Dict[str, Any]

_ERROR_TYPES = {
    exception.TooFewExponentsException: "too-few-exponents",
    exception.InvalidInputException: "invalid-input",
    exception.ZeroDivisorException: "division-by-zero",
    exception.NonMonicDivisorException: "non-monic-divisor",
    exception.SubsetBoundException: "subset-bound-exceeded",
    exception.InstanceTooLargeException: "instance-too-large",
    exception.StructuralException: "structural-error",
    exception.NotFlatException: "not-flat",
    exception.PreconditionException: "precondition-violation",
}


def error_type(err: exception.CyclosumException) -> str:
    for klass in type(err).__mro__:
        if klass in _ERROR_TYPES:
            return _ERROR_TYPES[klass]
    return "error"


def polynomial_payload(f: IntPolynomial) -> Payload:
    payload: Payload = {"coeffs": list(f.coeffs)}
    if f.is_zero_one():
        payload["exponents"] = list(f.exponents())
    return payload


@dataclass
class ReportEnvelope:
    """
    One CLI report. Exactly one of `result` and `error` is set; `error`
    holds {"type", "message"}. `elapsed_ms` is left out of the JSON form
    when timing is disabled.
    """
    command: str
    parameters: Payload
    tool_version: str
    result: Optional[Payload] = None
    error: Optional[Dict[str, str]] = None
    elapsed_ms: Optional[int] = None
    cached: bool = False

    @property
    def passed(self) -> bool:
        return self.result is None or self.result.get("passed", True)

    def to_dict(self, timing: bool = True) -> Payload:
        data: Payload = {
            "command": self.command,
            "parameters": self.parameters,
            "tool_version": self.tool_version,
        }
        if self.error is not None:
            data["error"] = self.error
        else:
            data["result"] = self.result
        if self.cached:
            data["cached"] = True
        if timing and self.elapsed_ms is not None:
            data["elapsed_ms"] = self.elapsed_ms
        return data

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        if self.error is not None:
            return f"error: {self.error['type']}: {self.error['message']}\n"
        return render_text(self.command, self.result)


def _poly_text(payload: Payload) -> str:
    return str(IntPolynomial(payload["coeffs"]))


def _set_text(exponents: List[int]) -> str:
    return "{" + ",".join(map(str, exponents)) + "}"


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _scalar(key: str) -> Callable[[Payload], List[str]]:
    def render(result: Payload) -> List[str]:
        value = result[key]
        return [_flag(value) if isinstance(value, bool) else str(value)]

    return render


def _cyclo(result: Payload) -> List[str]:
    return [_poly_text(result["polynomial"])]


def _lamleung(result: Payload) -> List[str]:
    lines = [f"r={result['r']} s={result['s']}"]
    for name in ("A", "B", "C", "D"):
        lines.append(f"{name}={_set_text(result[name])}")
    lines.append(f"reconstructs={_flag(result['passed'])}")
    return lines


def _gaps(result: Payload) -> List[str]:
    lines = [
        "gaps=" + ",".join(map(str, result["gaps"])),
        f"max_gap={result['max_gap']}",
    ]
    lemma = result.get("gap_lemma")
    if lemma is not None:
        lines.append(f"expected_max_gap={lemma['expected_phi_T_max_gap']} "
                     f"bound={lemma['bound']} passed={_flag(lemma['passed'])}")
    return lines


def _theorem(result: Payload) -> List[str]:
    shifts = ",".join(map(str, result["minimizing_shifts"]))
    return [
        f"expected_degree={result['expected_degree']} "
        f"degree_at_0={result['degree_at_zero']} "
        f"degree_at_{result['twin_shift']}={result['degree_at_twin']}",
        f"minimizing_shifts={shifts}",
        f"passed={_flag(result['passed'])}",
    ]


def _enumerate(result: Payload) -> List[str]:
    lines = []
    for cls in result["classes"]:
        lines.append(f"{_set_text(cls['exponents'])} weight={cls['weight']} "
                     f"degree={cls['degree']} orbit={cls['orbit_size']}")
    lines.append(f"classes={result['count']}")
    return lines


def _verdict(verdict: Payload) -> List[str]:
    winners = ",".join(f'"{w}"' for w in verdict["winners"])
    return [
        f"verdict match={_flag(verdict['match'])}, winners=[{winners}]",
        f"predicted={verdict['predicted_degree']} "
        f"observed={verdict['observed_degree']}",
    ]


def _search(result: Payload) -> List[str]:
    lines = [_poly_text(f) for f in result["lowest"]]
    lines.append(f"lowest_degree={result['lowest_degree']}")
    if result.get("conjecture") is not None:
        lines.extend(_verdict(result["conjecture"]))
    return lines


def _conjecture(result: Payload) -> List[str]:
    return _verdict(result)


def _lemma_s(result: Payload) -> List[str]:
    lines = [f"{_set_text(w['exponents'])} s={w['s']}"
             for w in result["witnesses"]]
    lines.extend(f"{_set_text(v)} no witness" for v in result["violations"])
    lines.append(f"checked={result['checked']} passed={_flag(result['passed'])}")
    return lines


_RENDERERS: Dict[str, Callable[[Payload], List[str]]] = {
    "cyclo": _cyclo,
    "phi": _scalar("phi"),
    "mobius": _scalar("mobius"),
    "height": _scalar("height"),
    "flat": _scalar("flat"),
    "transform": _cyclo,
    "lamleung": _lamleung,
    "gaps": _gaps,
    "theorem2pq": _theorem,
    "enumerate": _enumerate,
    "search": _search,
    "verify-conjecture": _conjecture,
    "lemma-s": _lemma_s,
}


def render_text(command: str, result: Payload) -> str:
    return "".join(line + "\n" for line in _RENDERERS[command](result))
