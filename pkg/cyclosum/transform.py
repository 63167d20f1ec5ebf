"""Module for the minimal vanishing sum built from a flat cyclotomic
polynomial, and for the structure of Phi_pq behind it.

Writing a flat Phi_n = f1 - f2 with 0,1-polynomials f1, f2 of disjoint
support, zeta_n^{n/2} = -1 gives f1(zeta_n) + zeta_n^{n/2} f2(zeta_n) = 0,
so Phi_n^T = f1 + x^{n/2} f2 is a 0,1-multiple of Phi_n.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import (
    Dict,
    List,
    Optional,
    Tuple,
)

from .config import THEOREM_2PQ_LIMIT
from .cyclotomic import (
    cyclotomic,
    euler_phi,
    factorize,
    is_flat,
    is_prime,
    is_square_free,
    order,
)
from .exception import (
    InstanceTooLargeException,
    InvalidInputException,
    NotFlatException,
    PreconditionException,
    StructuralException,
    TooFewExponentsException,
)
from .polynomial import IntPolynomial, poly_divrem
from .vanish import ExponentSet, is_minimal_vanishing

__all__ = [
    "GapVerdict",
    "PqStructure",
    "SignSplit",
    "TheoremVerdict",
    "gap_profile",
    "lam_leung_pq",
    "lemma_s_witness",
    "phi_T",
    "phi_T_degree",
    "phi_T_from_pq",
    "rotation_degree_profile",
    "sign_split",
    "theorem_shifts",
    "verify_gap_lemma",
    "verify_theorem_2pq",
]


@dataclass(frozen=True)
class SignSplit:
    """Nonnegative part `f1` and negated negative part `f2` of a polynomial,
    so that source = f1 - f2 with disjoint supports."""
    f1: IntPolynomial
    f2: IntPolynomial

    __slots__ = ("f1", "f2")

    @property
    def source(self) -> IntPolynomial:
        return self.f1 - self.f2


@dataclass(frozen=True)
class PqStructure:
    """
    Product form of Phi_pq for odd primes p < q:

        Phi_pq = (sum_{i<=r} x^{ip})(sum_{j<=s} x^{jq})
                 - (sum_{i>r} x^{ip})(sum_{j>s} x^{jq}) x^{-pq}

    with r*p + s*q = (p-1)(q-1). The first product splits into even
    exponents A and odd exponents B, the second into even C and odd D.
    All four are stored over the modulus 2pq.
    """
    p: int
    q: int
    r: int
    s: int
    A: ExponentSet
    B: ExponentSet
    C: ExponentSet
    D: ExponentSet

    __slots__ = ("p", "q", "r", "s", "A", "B", "C", "D")

    @property
    def n(self) -> int:
        return 2 * self.p * self.q

    @staticmethod
    def _poly(*parts: ExponentSet) -> IntPolynomial:
        return IntPolynomial.from_exponents(e for part in parts for e in part)

    def phi_pq(self) -> IntPolynomial:
        return self._poly(self.A, self.B) - self._poly(self.C, self.D)

    def phi_2pq(self) -> IntPolynomial:
        return self._poly(self.A, self.D) - self._poly(self.B, self.C)

    def exponents(self, *names: str) -> ExponentSet:
        """Union of the named parts, e.g. exponents("A", "D")."""
        return ExponentSet.of(
            self.n, (e for name in names for e in getattr(self, name)))


@dataclass(frozen=True)
class TheoremVerdict:
    p: int
    q: int
    n: int
    expected_degree: int
    degree_at_zero: int
    degree_at_twin: int
    twin_shift: int
    minimizing_shifts: Tuple[int, ...]
    counterexamples: Tuple[Tuple[int, int], ...]
    passed: bool

    __slots__ = ("p", "q", "n", "expected_degree", "degree_at_zero",
                 "degree_at_twin", "twin_shift", "minimizing_shifts",
                 "counterexamples", "passed")


@dataclass(frozen=True)
class GapVerdict:
    p: int
    q: int
    bound: int
    max_gaps: Dict[str, int]
    phi_T_max_gap: int
    expected_phi_T_max_gap: int
    passed: bool

    __slots__ = ("p", "q", "bound", "max_gaps", "phi_T_max_gap",
                 "expected_phi_T_max_gap", "passed")


def _check_odd_prime_pair(p: int, q: int) -> None:
    for x in (p, q):
        if not is_prime(x) or x == 2:
            raise InvalidInputException(f"{x} is not an odd prime")
    if p >= q:
        raise InvalidInputException(f"expected p < q, got p={p}, q={q}")


def _check_even(n: int) -> None:
    if not isinstance(n, int) or n < 2 or n % 2:
        raise InvalidInputException(f"expected an even n >= 2, got {n}")


def sign_split(f: IntPolynomial) -> SignSplit:
    if f.is_zero():
        raise InvalidInputException("cannot split the zero polynomial")
    f1 = IntPolynomial(tuple(max(c, 0) for c in f))
    f2 = IntPolynomial(tuple(max(-c, 0) for c in f))
    return SignSplit(f1, f2)


def phi_T(n: int) -> IntPolynomial:
    """Phi_n^T = f1 + x^{n/2} f2 for the sign split of a flat Phi_n.

    Raises:
        InvalidInputException: n is not even.
        NotFlatException: Phi_n has a coefficient of absolute value > 1.
    """
    _check_even(n)
    if not is_flat(n):
        raise NotFlatException(f"Phi_{n} is not flat")
    split = sign_split(cyclotomic(n))
    return split.f1 + split.f2.shift(n // 2)


def phi_T_degree(n: int) -> int:
    """Predicted degree of Phi_n^T for n = 2 p_1 ... p_k square-free:
    phi(n) - 1 + n/2 for odd k, phi(n) - p_1 + n/2 for even k."""
    _check_even(n)
    if not is_square_free(n):
        raise InvalidInputException(f"{n} is not square-free")
    k = order(n)
    if k < 1:
        raise InvalidInputException(f"{n} has no odd prime factor")
    if not is_flat(n):
        raise NotFlatException(f"Phi_{n} is not flat")

    p1 = factorize(n).primes[1]
    if k % 2:
        return euler_phi(n) - 1 + n // 2
    return euler_phi(n) - p1 + n // 2


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


def lam_leung_pq(p: int, q: int) -> PqStructure:
    _check_odd_prime_pair(p, q)
    phi = (p - 1) * (q - 1)

    # one solution of r*p + s*q = phi, moved along (q, -p) into the box
    _, x, _ = _extended_gcd(p, q)
    r = (x * phi) % q
    s, rest = divmod(phi - r * p, q)
    if rest or not (0 <= r <= q - 2 and 0 <= s <= p - 2):
        raise StructuralException(
            f"no (r, s) in the box for p={p}, q={q}: r={r}, s={s}")

    n = 2 * p * q
    positive = [i * p + j * q for i in range(r + 1) for j in range(s + 1)]
    negative = [i * p + j * q - p * q
                for i in range(r + 1, q)
                for j in range(s + 1, p)]
    if any(e < 0 for e in negative):
        raise StructuralException(
            f"negative exponent in the second product for p={p}, q={q}")

    def parity(values: List[int], rem: int) -> ExponentSet:
        return ExponentSet.of(n, (e for e in values if e % 2 == rem))

    return PqStructure(p, q, r, s,
                       A=parity(positive, 0),
                       B=parity(positive, 1),
                       C=parity(negative, 0),
                       D=parity(negative, 1))


def phi_T_from_pq(p: int, q: int) -> IntPolynomial:
    """Phi_{2pq}^T assembled as x^{pq}(B + C) + (A + D)."""
    structure = lam_leung_pq(p, q)
    low = IntPolynomial.from_exponents(structure.exponents("A", "D"))
    high = IntPolynomial.from_exponents(structure.exponents("B", "C"))
    return low + high.shift(p * q)


def gap_profile(e: ExponentSet) -> List[int]:
    exponents = sorted(e)
    if len(exponents) < 2:
        raise TooFewExponentsException(
            f"a gap profile needs two exponents, got {exponents}")
    return [b - a for a, b in zip(exponents, exponents[1:])]


def rotation_degree_profile(s: ExponentSet) -> List[Tuple[int, int]]:
    """Degree of the rotation (s + t) mod n for every shift t in 0..n-1."""
    if not s.exponents:
        raise InvalidInputException("empty exponent set has no rotations")

    n = s.modulus
    exponents = s.exponents
    profile = []
    for t in range(n):
        # exponents below n - t do not wrap around
        below = bisect_left(exponents, n - t)
        if below:
            profile.append((t, exponents[below - 1] + t))
        else:
            profile.append((t, exponents[-1] + t - n))
    return profile


def theorem_shifts(s: ExponentSet) -> List[int]:
    """Shifts that move some exponent of `s` onto 0."""
    return sorted({(s.modulus - e) % s.modulus for e in s})


def verify_theorem_2pq(p: int, q: int) -> TheoremVerdict:
    """Check on Phi_n^T, n = 2pq, that the rotations moving an exponent to 0
    reach their least degree n - 2p - q + 1 exactly at the shifts 0 and
    n/2 - p."""
    _check_odd_prime_pair(p, q)
    n = 2 * p * q
    if n > THEOREM_2PQ_LIMIT:
        raise InstanceTooLargeException(
            f"n = {n} exceeds the bound {THEOREM_2PQ_LIMIT}")

    exponents = ExponentSet.from_polynomial(n, phi_T(n))
    degrees = dict(rotation_degree_profile(exponents))
    shifts = theorem_shifts(exponents)
    expected = n - 2 * p - q + 1
    twin = n // 2 - p

    counterexamples = []
    for t in shifts:
        if t in (0, twin):
            continue
        if degrees[t] <= expected:
            counterexamples.append((t, degrees[t]))
    if twin not in shifts:
        counterexamples.append((twin, degrees[twin]))

    least = min(degrees[t] for t in shifts)
    minimizing = tuple(t for t in shifts if degrees[t] == least)
    passed = (degrees[0] == expected and degrees[twin] == expected
              and not counterexamples)
    return TheoremVerdict(p=p,
                          q=q,
                          n=n,
                          expected_degree=expected,
                          degree_at_zero=degrees[0],
                          degree_at_twin=degrees[twin],
                          twin_shift=twin,
                          minimizing_shifts=minimizing,
                          counterexamples=tuple(counterexamples),
                          passed=passed)


def verify_gap_lemma(p: int, q: int) -> GapVerdict:
    """Check that consecutive exponents of A, B, A+D, B+C and Phi_{2pq} are
    at most p + q apart, and that the widest gap of Phi_{2pq}^T is
    2p + q - 1."""
    structure = lam_leung_pq(p, q)
    parts = {
        "A": structure.exponents("A"),
        "B": structure.exponents("B"),
        "A+D": structure.exponents("A", "D"),
        "B+C": structure.exponents("B", "C"),
        "Phi": structure.exponents("A", "B", "C", "D"),
    }
    bound = p + q
    max_gaps = {name: max(gap_profile(e)) if len(e) > 1 else 0
                for name, e in parts.items()}

    n = structure.n
    transformed = ExponentSet.from_polynomial(n, phi_T_from_pq(p, q))
    widest = max(gap_profile(transformed))
    expected = 2 * p + q - 1

    passed = (all(g <= bound for g in max_gaps.values())
              and widest == expected)
    return GapVerdict(p=p,
                      q=q,
                      bound=bound,
                      max_gaps=max_gaps,
                      phi_T_max_gap=widest,
                      expected_phi_T_max_gap=expected,
                      passed=passed)


def lemma_s_witness(f: IntPolynomial,
                    n: int,
                    check_minimal: bool = False) -> Optional[int]:
    """Smallest exponent s of f with phi(n) <= s < n/2.

    For f in H_n with at least three terms and degree below n/2 + phi(n)
    such an exponent always exists, so `None` signals a counterexample.

    Raises:
        PreconditionException: f is not a 0,1-multiple of Phi_n with f(0) = 1,
            at least three terms and degree below min(n, n/2 + phi(n)), or
            (with `check_minimal`) f(zeta_n) is not a minimal vanishing sum.
    """
    _check_even(n)
    phi = euler_phi(n)
    if not f.is_zero_one() or f[0] != 1:
        raise PreconditionException(f"{f} is not a 0,1-polynomial with f(0)=1")
    exponents = f.exponents()
    if len(exponents) < 3:
        raise PreconditionException(f"{f} has fewer than three terms")
    if f.degree >= n // 2 + phi or f.degree >= n:
        raise PreconditionException(
            f"deg {f.degree} is not below min({n}, n/2 + phi(n) = {n // 2 + phi})")
    _, remainder = poly_divrem(f, cyclotomic(n))
    if not remainder.is_zero():
        raise PreconditionException(f"Phi_{n} does not divide {f}")
    if check_minimal and not is_minimal_vanishing(ExponentSet(n, exponents)):
        raise PreconditionException(
            f"{f} is not a minimal vanishing sum of {n}-th roots")

    for s in exponents:
        if phi <= s < n // 2:
            return s
    return None
