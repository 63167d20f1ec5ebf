"""Module for the cyclosum command line."""

from dataclasses import asdict
from typing import (
    Any,
    Callable,
    Dict,
    Optional,
    Sequence,
    TextIO,
)
import argparse
import json
import logging
import sys
import time

from . import __version__
from .cache import ResultCache
from .config import Settings
from .cyclotomic import (
    cyclotomic,
    euler_phi,
    height,
    is_flat,
    moebius,
)
from .exception import CyclosumException, InvalidInputException
from .report import ReportEnvelope, error_type, polynomial_payload
from .search import (
    SearchConfig,
    attach_verdict,
    conjecture_report,
    lowest_Hn_members,
    split_2pq,
)
from .transform import (
    gap_profile,
    lam_leung_pq,
    phi_T,
    phi_T_degree,
    phi_T_from_pq,
    verify_gap_lemma,
    verify_theorem_2pq,
)
from .vanish import ExponentSet, enumerate_minimal_sums, is_minimal_vanishing

__all__ = ["main", "run"]

logger = logging.getLogger(__name__)

Payload = Dict[str, Any]

# commands whose results go through the cache
_CACHED = {"enumerate", "search", "verify-conjecture", "lemma-s"}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise InvalidInputException(f"{self.prog}: {message}")


def _cmd_cyclo(args: argparse.Namespace, jobs: int) -> Payload:
    f = cyclotomic(args.n)
    return {"n": args.n, "degree": f.degree, "polynomial": polynomial_payload(f)}


def _cmd_phi(args: argparse.Namespace, jobs: int) -> Payload:
    return {"n": args.n, "phi": euler_phi(args.n)}


def _cmd_mobius(args: argparse.Namespace, jobs: int) -> Payload:
    return {"n": args.n, "mobius": moebius(args.n)}


def _cmd_height(args: argparse.Namespace, jobs: int) -> Payload:
    return {"n": args.n, "height": height(args.n)}


def _cmd_flat(args: argparse.Namespace, jobs: int) -> Payload:
    return {"n": args.n, "flat": is_flat(args.n)}


def _cmd_transform(args: argparse.Namespace, jobs: int) -> Payload:
    n = args.n
    f = phi_T(n)
    try:
        predicted: Optional[int] = phi_T_degree(n)
    except InvalidInputException:
        predicted = None
    minimal = is_minimal_vanishing(ExponentSet.from_polynomial(n, f),
                                   bounded=False)
    return {
        "n": n,
        "degree": f.degree,
        "predicted_degree": predicted,
        "terms": len(f.exponents()),
        "minimal": minimal,
        "passed": minimal and predicted in (None, f.degree),
        "polynomial": polynomial_payload(f),
    }


def _cmd_lamleung(args: argparse.Namespace, jobs: int) -> Payload:
    p, q = args.p, args.q
    structure = lam_leung_pq(p, q)
    checks = {
        "phi_pq": structure.phi_pq() == cyclotomic(p * q),
        "phi_2pq": structure.phi_2pq() == cyclotomic(2 * p * q),
        "phi_T": phi_T_from_pq(p, q) == phi_T(2 * p * q),
    }
    return {
        "p": p,
        "q": q,
        "r": structure.r,
        "s": structure.s,
        "A": list(structure.A),
        "B": list(structure.B),
        "C": list(structure.C),
        "D": list(structure.D),
        "checks": checks,
        "passed": all(checks.values()),
    }


def _cmd_gaps(args: argparse.Namespace, jobs: int) -> Payload:
    n = args.n
    exponents = ExponentSet.from_polynomial(n, phi_T(n))
    gaps = gap_profile(exponents)
    payload: Payload = {
        "n": n,
        "exponents": list(exponents),
        "gaps": gaps,
        "max_gap": max(gaps),
        "gap_lemma": None,
        "passed": True,
    }
    pair = split_2pq(n)
    if pair is not None:
        verdict = verify_gap_lemma(*pair)
        payload["gap_lemma"] = asdict(verdict)
        payload["passed"] = verdict.passed
    return payload


def _cmd_theorem2pq(args: argparse.Namespace, jobs: int) -> Payload:
    return asdict(verify_theorem_2pq(args.p, args.q))


def _cmd_enumerate(args: argparse.Namespace, jobs: int) -> Payload:
    classes = enumerate_minimal_sums(args.n, args.max_weight, jobs)
    return {
        "n": args.n,
        "max_weight": args.max_weight,
        "count": len(classes),
        "classes": [{
            "exponents": list(cls.canonical),
            "degree": cls.degree,
            "weight": cls.weight,
            "stabilizer_order": cls.stabilizer_order,
            "orbit_size": cls.orbit_size,
        } for cls in classes],
    }


def _cmd_search(args: argparse.Namespace, jobs: int) -> Payload:
    n = args.n
    max_degree = n - 1 if args.max_degree is None else args.max_degree
    config = SearchConfig(n, max_degree, min_terms=args.min_terms)
    report = attach_verdict(lowest_Hn_members(config, jobs))
    verdict = report.conjecture_verdict
    return {
        "n": n,
        "max_degree": max_degree,
        "min_terms": args.min_terms,
        "found": [{
            "exponents": list(entry.exponents),
            "degree": entry.degree,
            "term_count": entry.term_count,
            "minimal": entry.minimal,
            "canonical_in_class": entry.canonical_in_class,
            "lemma_s": entry.lemma_s,
        } for entry in report.found],
        "lowest_degree": report.lowest_degree,
        "lowest": [polynomial_payload(f)
                   for f in report.lowest_degree_minimal or []],
        "conjecture": asdict(verdict) if verdict else None,
        "passed": verdict.match if verdict else True,
    }


def _cmd_verify_conjecture(args: argparse.Namespace, jobs: int) -> Payload:
    verdict = conjecture_report(args.p, args.q, jobs).conjecture_verdict
    payload = asdict(verdict)
    payload["passed"] = verdict.match
    return payload


def _cmd_lemma_s(args: argparse.Namespace, jobs: int) -> Payload:
    n = args.n
    if n < 2 or n % 2:
        raise InvalidInputException(f"expected an even n >= 2, got {n}")
    bound = min(n - 1, n // 2 + euler_phi(n) - 1)
    report = lowest_Hn_members(SearchConfig(n, bound), jobs)
    members = [entry for entry in report.found
               if entry.minimal and entry.canonical_in_class
               and entry.term_count >= 3]
    witnesses = [{"exponents": list(entry.exponents), "s": entry.lemma_s}
                 for entry in members if entry.lemma_s is not None]
    violations = [list(entry.exponents)
                  for entry in members if entry.lemma_s is None]
    return {
        "n": n,
        "max_degree": bound,
        "checked": len(members),
        "witnesses": witnesses,
        "violations": violations,
        "passed": not violations,
    }


Handler = Callable[[argparse.Namespace, int], Payload]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="report format (default: text)")
    parser.add_argument("--no-timing", action="store_true",
                        help="leave elapsed_ms out of JSON reports")
    parser.add_argument("--cache-dir", default=None,
                        help="result cache directory "
                        "(default: $CYCLOSUM_CACHE_DIR, off when unset)")
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $CYCLOSUM_JOBS or 1)")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to stderr, twice for debug")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    _add_common(common)

    parser = _ArgumentParser(
        prog="cyclosum",
        description="Cyclotomic polynomials and vanishing sums of roots of "
        "unity.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def command(name: str, handler: Handler, summary: str,
                *positionals: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=summary)
        for positional in positionals:
            sub.add_argument(positional, type=int)
        sub.set_defaults(handler=handler, params=positionals)
        return sub

    command("cyclo", _cmd_cyclo, "n-th cyclotomic polynomial", "n")
    command("phi", _cmd_phi, "Euler's totient", "n")
    command("mobius", _cmd_mobius, "Moebius function", "n")
    command("height", _cmd_height, "largest coefficient of Phi_n", "n")
    command("flat", _cmd_flat, "whether Phi_n is flat", "n")
    command("transform", _cmd_transform, "Phi_n^T for flat even n", "n")
    command("lamleung", _cmd_lamleung, "structure of Phi_pq", "p", "q")
    command("gaps", _cmd_gaps, "exponent gaps of Phi_n^T", "n")
    command("theorem2pq", _cmd_theorem2pq,
            "least rotation degree of Phi_2pq^T", "p", "q")

    sub = command("enumerate", _cmd_enumerate,
                  "minimal vanishing sums up to rotation", "n")
    sub.add_argument("--max-weight", type=int, default=None)
    sub.set_defaults(params=("n", "max_weight"))

    sub = command("search", _cmd_search, "lowest-degree members of H_n", "n")
    sub.add_argument("--max-degree", type=int, default=None)
    sub.add_argument("--min-terms", type=int, default=3)
    sub.set_defaults(params=("n", "max_degree", "min_terms"))

    command("verify-conjecture", _cmd_verify_conjecture,
            "lowest H_2pq degree against min{n-2q, n-2p-q+1}", "p", "q")
    command("lemma-s", _cmd_lemma_s,
            "witness exponents for the members of H_n", "n")
    return parser


def _guess_format(argv: Sequence[str]) -> str:
    for i, arg in enumerate(argv):
        if arg == "--format=json":
            return "json"
        if arg == "--format" and argv[i + 1:i + 2] == ["json"]:
            return "json"
    return "text"


def _configure_logging(verbose: int) -> None:
    if not verbose:
        return
    level = logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level,
                        stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _write(envelope: ReportEnvelope, fmt: str, timing: bool,
           stdout: TextIO) -> None:
    if fmt == "json":
        stdout.write(envelope.to_json(timing))
    else:
        stdout.write(envelope.to_text())


def run(argv: Optional[Sequence[str]] = None,
        stdout: Optional[TextIO] = None) -> int:
    """Run one command and write its report.

    Returns:
        0 on success, 1 on invalid input or any other library error, 2 when
        a verification finished and did not pass.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = sys.stdout if stdout is None else stdout

    try:
        args = build_parser().parse_args(argv)
    except InvalidInputException as err:
        envelope = ReportEnvelope(command=argv[0] if argv else "",
                                  parameters={},
                                  tool_version=__version__,
                                  error={
                                      "type": error_type(err),
                                      "message": str(err)
                                  })
        _write(envelope, _guess_format(argv), False, stdout)
        return 1

    _configure_logging(args.verbose)
    settings = Settings.resolve(cache_dir=args.cache_dir, jobs=args.jobs)
    parameters = {name: getattr(args, name) for name in args.params}
    envelope = ReportEnvelope(command=args.command,
                              parameters=parameters,
                              tool_version=__version__)

    cache = None
    if settings.cache_dir and args.command in _CACHED:
        cache = ResultCache(settings.cache_dir, __version__)

    start = time.perf_counter()
    try:
        result = cache.get(args.command, parameters) if cache else None
        envelope.cached = result is not None
        if result is None:
            # plain JSON types, so fresh and cached reports render alike
            result = json.loads(json.dumps(args.handler(args, settings.jobs)))
            if cache:
                cache.put(args.command, parameters, result)
        envelope.result = result
    except CyclosumException as err:
        logger.debug("%s failed", args.command, exc_info=True)
        envelope.error = {"type": error_type(err), "message": str(err)}
    envelope.elapsed_ms = int((time.perf_counter() - start) * 1000)

    _write(envelope, args.format, not args.no_timing, stdout)
    if envelope.error is not None:
        return 1
    return 0 if envelope.passed else 2


def main() -> None:  # pragma: no cover
    sys.exit(run())
