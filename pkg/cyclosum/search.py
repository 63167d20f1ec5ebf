"""Module for the lowest-degree 0,1-multiples of Phi_n.

H_n is the set of 0,1-polynomials f with f(0) = 1 and deg f <= n - 1 whose
roots include zeta_n, taken on the least-degree representative of every
rotation class of minimal vanishing sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import (
    Iterator,
    List,
    Optional,
    Tuple,
)
import logging

from .config import DFS_DEPTH_LIMIT
from .cyclotomic import cyclotomic, euler_phi, factorize, is_prime
from .exception import InstanceTooLargeException, InvalidInputException
from .multiples import search_multiples
from .polynomial import IntPolynomial
from .transform import lemma_s_witness, phi_T
from .vanish import (
    ExponentSet,
    canonicalize,
    g_family,
    is_minimal_vanishing,
)

__all__ = [
    "ConjectureVerdict",
    "FoundMultiple",
    "SearchConfig",
    "SearchReport",
    "attach_verdict",
    "conjecture_report",
    "iter_zero_one_multiples",
    "lowest_Hn_members",
    "split_2pq",
    "verify_conjecture",
    "zero_one_multiples",
]

logger = logging.getLogger(__name__)

G1_LABEL = "g1"
PHI_T_LABEL = "phiT"


@dataclass(frozen=True)
class SearchConfig:
    n: int
    max_degree: int
    require_constant_term: bool = True
    min_terms: int = 3

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 2 or n % 2:
            raise InvalidInputException(f"expected an even n >= 2, got {n}")
        if self.max_degree > n - 1:
            raise InvalidInputException(
                f"max_degree {self.max_degree} exceeds n - 1 = {n - 1}")
        phi = euler_phi(n)
        if self.max_degree < phi:
            raise InvalidInputException(
                f"max_degree {self.max_degree} is below phi({n}) = {phi}")
        if self.min_terms < 1:
            raise InvalidInputException(
                f"min_terms must be positive, got {self.min_terms}")


@dataclass(frozen=True)
class FoundMultiple:
    """One 0,1-multiple of Phi_n seen by the H_n search.

    `lemma_s` is an exponent s with phi(n) <= s < n/2, filled in for
    minimal sums with at least three terms and degree below n/2 + phi(n).
    """
    polynomial: IntPolynomial
    degree: int
    term_count: int
    minimal: bool
    canonical_in_class: bool
    lemma_s: Optional[int] = None

    @property
    def exponents(self) -> Tuple[int, ...]:
        return self.polynomial.exponents()


@dataclass(frozen=True)
class ConjectureVerdict:
    p: int
    q: int
    n: int
    predicted_degree: int
    observed_degree: Optional[int]
    exists_at_predicted: bool
    none_below: bool
    expected_winners: Tuple[str, ...]
    winners: Tuple[str, ...]
    other_winners: Tuple[Tuple[int, ...], ...]
    match: bool

    __slots__ = ("p", "q", "n", "predicted_degree", "observed_degree",
                 "exists_at_predicted", "none_below", "expected_winners",
                 "winners", "other_winners", "match")


@dataclass
class SearchReport:
    config: SearchConfig
    found: List[FoundMultiple] = field(default_factory=list)
    lowest_degree_minimal: Optional[List[IntPolynomial]] = None
    conjecture_verdict: Optional[ConjectureVerdict] = None

    @property
    def lowest_degree(self) -> Optional[int]:
        if not self.lowest_degree_minimal:
            return None
        return self.lowest_degree_minimal[0].degree


def _check_depth(n: int, top: int) -> None:
    depth = top - euler_phi(n)
    if depth > DFS_DEPTH_LIMIT:
        raise InstanceTooLargeException(
            f"n = {n} needs a quotient of degree {depth}, above the DFS "
            f"bound {DFS_DEPTH_LIMIT}")


def iter_zero_one_multiples(config: SearchConfig,
                            jobs: int = 1) -> Iterator[IntPolynomial]:
    """Yield the 0,1-multiples of Phi_n degree by degree, from phi(n) up to
    `config.max_degree`."""
    _check_depth(config.n, config.max_degree)
    return _iter_degrees(config, jobs)


def _iter_degrees(config: SearchConfig, jobs: int) -> Iterator[IntPolynomial]:
    divisor = cyclotomic(config.n)
    for degree in range(divisor.degree, config.max_degree + 1):
        found = search_multiples(divisor, (0, 1), degree,
                                 config.require_constant_term, jobs)
        logger.debug("n=%d degree %d: %d 0,1-multiples", config.n, degree,
                     len(found))
        for coeffs in found:
            yield IntPolynomial(coeffs)


def zero_one_multiples(config: SearchConfig,
                       jobs: int = 1) -> List[IntPolynomial]:
    """Every 0,1-polynomial f with deg f <= max_degree divisible by Phi_n
    (and f(0) = 1 unless `require_constant_term` is unset).

    Raises:
        InstanceTooLargeException: some degree needs a quotient of degree
            above 40.
    """
    return list(iter_zero_one_multiples(config, jobs))


def _unfold(coeffs: Tuple[int, ...], half: int) -> IntPolynomial:
    exponents = [e for e, c in enumerate(coeffs) if c == 1]
    exponents.extend(e + half for e, c in enumerate(coeffs) if c == -1)
    return IntPolynomial.from_exponents(exponents)


def _pair_free_multiples(config: SearchConfig,
                         jobs: int) -> Iterator[IntPolynomial]:
    """0,1-multiples of Phi_n up to max_degree without two exponents n/2
    apart.

    Such an f maps to F = f mod (x^{n/2} + 1), a multiple of Phi_n with
    coefficients in {-1, 0, 1} and degree below n/2, and every such F comes
    from exactly one f.
    """
    n = config.n
    half = n // 2
    divisor = cyclotomic(n)
    top = min(half - 1, config.max_degree)
    for degree in range(divisor.degree, top + 1):
        found = search_multiples(divisor, (-1, 0, 1), degree,
                                 config.require_constant_term, jobs)
        logger.debug("n=%d folded degree %d: %d multiples", n, degree,
                     len(found))
        for coeffs in found:
            f = _unfold(coeffs, half)
            if f.degree <= config.max_degree:
                yield f


def _examine(f: IntPolynomial, n: int) -> FoundMultiple:
    s = ExponentSet(n, f.exponents())
    minimal = is_minimal_vanishing(s, bounded=False)
    canonical = f.degree == canonicalize(s).degree

    witness = None
    if (minimal and len(s) >= 3 and f[0] == 1
            and f.degree < n // 2 + euler_phi(n)):
        witness = lemma_s_witness(f, n)

    return FoundMultiple(polynomial=f,
                         degree=f.degree,
                         term_count=len(s),
                         minimal=minimal,
                         canonical_in_class=canonical,
                         lemma_s=witness)


def lowest_Hn_members(config: SearchConfig, jobs: int = 1) -> SearchReport:
    """Find the lowest-degree members of H_n with at least `min_terms`
    terms.

    With at least three terms a sum holding an antipodal pair x^e, x^{e+n/2}
    is never minimal, so only pair-free multiples are examined; g_0 =
    x^{n/2} + 1 is added when two-term members are asked for. `found` lists
    every examined multiple with its minimality and canonicality flags.
    """
    n = config.n
    _check_depth(n, min(n // 2 - 1, config.max_degree))
    found = []
    if config.min_terms <= 2 and n // 2 <= config.max_degree:
        g0 = IntPolynomial.from_exponents((0, n // 2))
        found.append(FoundMultiple(g0, g0.degree, 2, True, True))

    for f in _pair_free_multiples(config, jobs):
        if len(f.exponents()) >= config.min_terms:
            found.append(_examine(f, n))

    found.sort(key=lambda entry: (entry.degree, entry.exponents))

    members = [entry for entry in found
               if entry.minimal and entry.canonical_in_class]
    report = SearchReport(config=config, found=found)
    if members:
        lowest = members[0].degree
        report.lowest_degree_minimal = [
            entry.polynomial for entry in members if entry.degree == lowest
        ]
    logger.info("n=%d: %d candidates, lowest H_n degree %s", n, len(found),
                report.lowest_degree)
    return report


def split_2pq(n: int) -> Optional[Tuple[int, int]]:
    """(p, q) with n = 2pq for odd primes p < q, else None."""
    if not isinstance(n, int) or n < 2:
        return None
    if [e for _, e in factorize(n).prime_powers] != [1, 1, 1]:
        return None
    two, p, q = factorize(n).primes
    if two != 2:
        return None
    return p, q


def _check_pair(p: int, q: int) -> None:
    for x in (p, q):
        if not is_prime(x) or x == 2:
            raise InvalidInputException(f"{x} is not an odd prime")
    if p >= q:
        raise InvalidInputException(f"expected p < q, got p={p}, q={q}")


def _predicted_degree(p: int, q: int) -> int:
    n = 2 * p * q
    return min(n - 2 * q, n - 2 * p - q + 1)


def _expected_winners(p: int, q: int) -> Tuple[str, ...]:
    if 2 * p < q + 1:
        return (G1_LABEL, )
    if 2 * p > q + 1:
        return (PHI_T_LABEL, )
    return (G1_LABEL, PHI_T_LABEL)


def _judge(p: int, q: int, report: SearchReport) -> ConjectureVerdict:
    n = 2 * p * q
    predicted = _predicted_degree(p, q)
    observed = report.lowest_degree

    labels = {
        G1_LABEL: canonicalize(ExponentSet.from_polynomial(n, g_family(n, p))),
        PHI_T_LABEL: canonicalize(ExponentSet.from_polynomial(n, phi_T(n))),
    }

    winners = []
    others = []
    for f in report.lowest_degree_minimal or []:
        cls = canonicalize(ExponentSet(n, f.exponents()))
        names = [name for name, known in labels.items()
                 if known.canonical == cls.canonical]
        if names:
            winners.extend(names)
        else:
            others.append(f.exponents())

    expected = _expected_winners(p, q)
    exists_at = observed == predicted
    none_below = observed is None or observed >= predicted
    match = exists_at and none_below and set(expected) <= set(winners)
    return ConjectureVerdict(p=p,
                             q=q,
                             n=n,
                             predicted_degree=predicted,
                             observed_degree=observed,
                             exists_at_predicted=exists_at,
                             none_below=none_below,
                             expected_winners=expected,
                             winners=tuple(sorted(set(winners))),
                             other_winners=tuple(others),
                             match=match)


def conjecture_report(p: int, q: int, jobs: int = 1) -> SearchReport:
    """Search H_{2pq} up to min{n - 2q, n - 2p - q + 1} and attach the
    verdict on that degree and its winners.

    Raises:
        InvalidInputException: p, q are not odd primes with p < q.
        InstanceTooLargeException: the folded search would need a quotient
            of degree above 40.
    """
    _check_pair(p, q)
    n = 2 * p * q
    predicted = _predicted_degree(p, q)
    _check_depth(n, min(n // 2 - 1, predicted))

    report = lowest_Hn_members(SearchConfig(n, predicted), jobs)
    report.conjecture_verdict = _judge(p, q, report)
    return report


def verify_conjecture(p: int, q: int, jobs: int = 1) -> ConjectureVerdict:
    return conjecture_report(p, q, jobs).conjecture_verdict


def attach_verdict(report: SearchReport) -> SearchReport:
    """Attach a conjecture verdict to a search over n = 2pq that reached the
    predicted degree; other reports are returned unchanged."""
    pair = split_2pq(report.config.n)
    config = report.config
    if (pair is None or config.min_terms != 3
            or not config.require_constant_term):
        return report
    if config.max_degree < _predicted_degree(*pair):
        return report
    report.conjecture_verdict = _judge(*pair, report)
    return report
