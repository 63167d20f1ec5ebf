"""Module for sums of distinct n-th roots of unity.

A sum zeta^{k_1} + ... + zeta^{k_l} of distinct n-th roots of unity is stored
as an `ExponentSet`, the set {k_1, ..., k_l} of residues mod n. Such a sum
vanishes exactly when Phi_n divides the 0,1-polynomial with those exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import (
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
)
import logging

from .config import (
    CAPPED_ENUMERATION_LIMIT,
    CAPPED_ENUMERATION_WEIGHT,
    FULL_ENUMERATION_LIMIT,
    MINIMALITY_SUBSET_BOUND,
)
from .cyclotomic import cyclotomic, factorize, is_prime, radical
from .debugger import debugger
from .exception import (
    InstanceTooLargeException,
    InvalidInputException,
    StructuralException,
    SubsetBoundException,
)
from .parallel import run_tasks
from .polynomial import IntPolynomial, poly_divrem

__all__ = [
    "ExponentSet",
    "RotationClass",
    "canonicalize",
    "enumerate_minimal_sums",
    "g_family",
    "is_minimal_vanishing",
    "is_vanishing",
    "lemma2_shift",
    "residue_vectors",
    "set_to_polynomial",
    "sigma_product_sum",
]

logger = logging.getLogger(__name__)

# rank test modulus, a Mersenne prime
_RANK_PRIME = 2**61 - 1

# prefix depth used to split enumeration into worker tasks
_SPLIT_DEPTH = 6


@dataclass(frozen=True)
class ExponentSet:
    """
    ExponentSet holds the strictly increasing residues mod `modulus` of the
    roots of unity appearing in a sum. Use `ExponentSet.of` to build one from
    arbitrary integers.
    """
    modulus: int
    exponents: Tuple[int, ...]

    __slots__ = ("modulus", "exponents")

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidInputException(
                f"modulus must be positive, got {self.modulus}")
        exponents = tuple(self.exponents)
        for a, b in zip(exponents, exponents[1:]):
            if a >= b:
                raise InvalidInputException(
                    f"exponents must be strictly increasing: {exponents}")
        if exponents and (exponents[0] < 0
                          or exponents[-1] >= self.modulus):
            raise InvalidInputException(
                f"exponents {exponents} must lie in 0..{self.modulus - 1}")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def of(cls, modulus: int, exponents: Iterable[int]) -> ExponentSet:
        """Reduce `exponents` mod `modulus` and sort them.

        Raises:
            InvalidInputException: two exponents coincide mod `modulus`.
        """
        if modulus < 1:
            raise InvalidInputException(
                f"modulus must be positive, got {modulus}")
        reduced = [e % modulus for e in exponents]
        unique = sorted(set(reduced))
        if len(unique) != len(reduced):
            raise InvalidInputException(
                f"exponents are not distinct mod {modulus}: {sorted(reduced)}")
        return cls(modulus, tuple(unique))

    @classmethod
    def from_polynomial(cls, modulus: int, f: IntPolynomial) -> ExponentSet:
        if not f.is_zero_one():
            raise InvalidInputException(f"{f} is not a 0,1-polynomial")
        return cls.of(modulus, f.exponents())

    @property
    def degree(self) -> int:
        return self.exponents[-1] if self.exponents else -1

    @property
    def weight(self) -> int:
        return len(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __contains__(self, e: object) -> bool:
        return e in self.exponents

    def rotate(self, t: int) -> ExponentSet:
        """Shift every exponent by t mod n, i.e. multiply the sum by zeta^t."""
        return ExponentSet.of(self.modulus, (e + t for e in self.exponents))

    def __str__(self) -> str:
        inner = ",".join(map(str, self.exponents))
        return f"{{{inner}}} mod {self.modulus}"


@dataclass(frozen=True)
class RotationClass:
    """
    RotationClass is the canonical representative of an exponent set under
    rotation: it contains 0, has the least degree among such rotations, and
    ties are broken by the lexicographically smallest exponent list.
    `shift_applied` is the smallest t that rotates the input onto it.
    """
    modulus: int
    canonical: ExponentSet
    shift_applied: int

    __slots__ = ("modulus", "canonical", "shift_applied")

    @property
    def degree(self) -> int:
        return self.canonical.degree

    @property
    def weight(self) -> int:
        return self.canonical.weight

    @property
    def stabilizer_order(self) -> int:
        """Number of rotations that fix the class representative."""
        return sum(1 for t in self.canonical
                   if self.canonical.rotate(t) == self.canonical)

    @property
    def orbit_size(self) -> int:
        return self.modulus // self.stabilizer_order

    def sort_key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.weight, self.degree, self.canonical.exponents)


def set_to_polynomial(s: ExponentSet) -> IntPolynomial:
    return IntPolynomial.from_exponents(s.exponents)


@lru_cache(maxsize=256)
def residue_vectors(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Coefficient vectors of x^k mod Phi_n for k = 0..n-1.

    A subset of exponents vanishes exactly when its vectors sum to zero.
    """
    phi = cyclotomic(n)
    d = phi.degree
    vectors = []
    current = [0] * d
    current[0] = 1
    for _ in range(n):
        vectors.append(tuple(current))
        # multiply by x and reduce with the monic Phi_n
        top = current[-1]
        current = [0] + current[:-1]
        if top:
            for j in range(d):
                current[j] -= top * phi[j]
    return tuple(vectors)


def is_vanishing(s: ExponentSet) -> bool:
    """Test whether the sum of the roots in `s` is zero, by exact division
    by Phi_n. The empty set is not considered a vanishing sum."""
    if not s.exponents:
        return False
    _, remainder = poly_divrem(set_to_polynomial(s), cyclotomic(s.modulus))
    return remainder.is_zero()


def _rank_mod_prime(rows: Sequence[Sequence[int]]) -> int:
    pivots: List[Tuple[int, List[int]]] = []
    for row in rows:
        vector = [x % _RANK_PRIME for x in row]
        for column, pivot in pivots:
            c = vector[column]
            if c:
                vector = [(a - c * b) % _RANK_PRIME
                          for a, b in zip(vector, pivot)]
        for column, c in enumerate(vector):
            if c:
                inverse = pow(c, _RANK_PRIME - 2, _RANK_PRIME)
                pivots.append(
                    (column, [(a * inverse) % _RANK_PRIME for a in vector]))
                break
    return len(pivots)


def _contained_coset(n: int, members: Set[int]) -> Optional[Tuple[int, ...]]:
    """A full coset {e + k*n/p} of a prime order subgroup inside `members`."""
    for p in factorize(n).primes:
        step = n // p
        for e in members:
            if e >= step:
                continue
            coset = tuple(e + k * step for k in range(p))
            if all(c in members for c in coset):
                return coset
    return None


def _has_vanishing_part(rows: Sequence[Sequence[int]]) -> bool:
    """Whether a nonempty proper subset of `rows` sums to zero.

    A vanishing part has a vanishing complement, so only subsets holding
    rows[0] are walked.
    """
    count = len(rows)
    width = len(rows[0])
    upper = [[0] * width for _ in range(count + 1)]
    lower = [[0] * width for _ in range(count + 1)]
    for k in range(count - 1, 0, -1):
        for j in range(width):
            upper[k][j] = upper[k + 1][j] + max(rows[k][j], 0)
            lower[k][j] = lower[k + 1][j] + min(rows[k][j], 0)

    def walk(k: int, total: List[int], size: int) -> bool:
        if k == count:
            return False
        for j, t in enumerate(total):
            if t + lower[k][j] > 0 or t + upper[k][j] < 0:
                return False

        extended = [t + v for t, v in zip(total, rows[k])]
        if size + 1 < count and not any(extended):
            return True
        return walk(k + 1, extended, size + 1) or walk(k + 1, total, size)

    return walk(1, list(rows[0]), 1)


def is_minimal_vanishing(s: ExponentSet, bounded: bool = True) -> bool:
    """Test whether `s` vanishes and no proper nonempty sub-sum does.

    Two exact shortcuts run before subset enumeration. A set that contains a
    full coset of a prime order subgroup is minimal only if it is that
    coset. If the residue vectors of `s` have rank |s| - 1, the only 0,1
    kernel vectors are zero and all-ones, so `s` is minimal; the rank is
    taken mod a large prime, which never over-estimates it.

    With `bounded` unset the subset walk runs at any weight.

    Raises:
        SubsetBoundException: subset enumeration is needed, `bounded` is set
            and |s| > 24.
    """
    if not is_vanishing(s):
        return False

    n = s.modulus
    members = set(s.exponents)
    coset = _contained_coset(n, members)
    if coset is not None:
        return len(coset) == len(members)

    vectors = residue_vectors(n)
    rows = [vectors[e] for e in s.exponents]
    if _rank_mod_prime(rows) == len(rows) - 1:
        return True

    if bounded and len(rows) > MINIMALITY_SUBSET_BOUND:
        raise SubsetBoundException(
            f"minimality of a weight {len(rows)} sum needs subset "
            f"enumeration beyond the bound {MINIMALITY_SUBSET_BOUND}")

    return not _has_vanishing_part(rows)


def canonicalize(s: ExponentSet) -> RotationClass:
    if not s.exponents:
        raise InvalidInputException("cannot canonicalize an empty sum")

    n = s.modulus
    best = None
    for e in s.exponents:
        t = (n - e) % n
        rotated = s.rotate(t)
        key = (rotated.degree, rotated.exponents, t)
        if best is None or key < best[0]:
            best = (key, rotated, t)

    _, canonical, t = best
    return RotationClass(n, canonical, t)


def lemma2_shift(s: ExponentSet) -> Optional[int]:
    """A shift placing every exponent on a multiple of n/n_0, where n_0 is
    the radical of n; `None` if no such shift exists."""
    n = s.modulus
    step = n // radical(n)
    if not s.exponents:
        return 0
    residues = {e % step for e in s.exponents}
    if len(residues) != 1:
        return None
    return (-residues.pop()) % step


def g_family(n: int, p: int) -> IntPolynomial:
    """The polynomial 1 + x^{n/p} + ... + x^{(p-1)n/p} of the sum
    1 + sigma(p) = 0."""
    if not is_prime(p):
        raise InvalidInputException(f"{p} is not prime")
    if n < 1 or n % p:
        raise InvalidInputException(f"{p} does not divide {n}")
    step = n // p
    return IntPolynomial.from_exponents(k * step for k in range(p))


def sigma_product_sum(n: int, pi: int, pj: int, pk: int) -> ExponentSet:
    """Exponent set of sigma(p_i)*sigma(p_j) + sigma(p_k) as n-th roots.

    Raises:
        InvalidInputException: primes are not distinct primes dividing n.
        StructuralException: the expanded roots are not distinct.
    """
    primes = (pi, pj, pk)
    if len(set(primes)) != 3:
        raise InvalidInputException(f"primes {primes} are not distinct")
    for p in primes:
        if not is_prime(p):
            raise InvalidInputException(f"{p} is not prime")
        if n % p:
            raise InvalidInputException(f"{p} does not divide {n}")

    raw = [(a * (n // pi) + b * (n // pj)) % n
           for a in range(1, pi)
           for b in range(1, pj)]
    raw.extend(c * (n // pk) for c in range(1, pk))
    expected = (pi - 1) * (pj - 1) + (pk - 1)
    if len(set(raw)) != expected:
        raise StructuralException(
            f"sigma({pi})*sigma({pj})+sigma({pk}) mod {n} has colliding roots")
    return ExponentSet.of(n, raw)


@debugger
class _SubsetWalker:
    """Depth-first walk over exponent sets that contain 0, pruned by exact
    interval bounds on the residue coordinates."""

    def __init__(self, n: int, max_weight: int) -> None:
        self.n = n
        self.max_weight = max_weight
        self.vectors = residue_vectors(n)
        width = len(self.vectors[0])
        self.width = width

        # bounds of what exponents index..n-1 can still add per coordinate
        self.upper = [[0] * width for _ in range(n + 1)]
        self.lower = [[0] * width for _ in range(n + 1)]
        for k in range(n - 1, -1, -1):
            for j in range(width):
                v = self.vectors[k][j]
                self.upper[k][j] = self.upper[k + 1][j] + max(v, 0)
                self.lower[k][j] = self.lower[k + 1][j] + min(v, 0)

        self.cosets: List[List[Tuple[int, ...]]] = [[] for _ in range(n)]
        for p in factorize(n).primes:
            step = n // p
            for e in range(step):
                coset = tuple(e + k * step for k in range(p))
                self.cosets[coset[-1]].append(coset)

        self.chosen: List[int] = []
        self.members: Set[int] = set()
        self.total = [0] * width
        self.found: List[Tuple[int, ...]] = []

    def _push(self, e: int) -> None:
        self.chosen.append(e)
        self.members.add(e)
        for j, v in enumerate(self.vectors[e]):
            self.total[j] += v

    def _pop(self) -> None:
        e = self.chosen.pop()
        self.members.discard(e)
        for j, v in enumerate(self.vectors[e]):
            self.total[j] -= v

    def _feasible(self, index: int) -> bool:
        upper = self.upper[index]
        lower = self.lower[index]
        for j, t in enumerate(self.total):
            if t + lower[j] > 0 or t + upper[j] < 0:
                return False
        return True

    def _completes_coset(self, e: int) -> bool:
        """True when adding e closes a coset strictly inside the set."""
        for coset in self.cosets[e]:
            if all(c in self.members for c in coset):
                return len(coset) != len(self.chosen)
        return False

    def _vanishes(self) -> bool:
        return not any(self.total)

    def _accept(self, e: int) -> Optional[bool]:
        """Add e; None means prune, True means the set just vanished."""
        self._push(e)
        if len(self.chosen) > self.max_weight or self._completes_coset(e):
            self._pop()
            return None
        return self._vanishes()

    def run_prefix(self, prefix: Sequence[int], start: int) -> List[Tuple[int, ...]]:
        """Walk every set whose members below `start` are exactly 0 plus
        `prefix`."""
        for e in (0, ) + tuple(prefix):
            status = self._accept(e)
            if status is None:
                return []
            if status:
                if e == (prefix[-1] if prefix else 0):
                    self.found.append(tuple(self.chosen))
                return self.found
        self._walk(start)
        return self.found

    def _walk(self, index: int) -> None:
        if index >= self.n or not self._feasible(index):
            return

        status = self._accept(index)
        if status is not None:
            if status:
                self.found.append(tuple(self.chosen))
            else:
                self._walk(index + 1)
            self._pop()

        self._walk(index + 1)


def _enumeration_task(task: Tuple[int, int, Tuple[int, ...], int]) -> List[Tuple[int, ...]]:
    n, max_weight, prefix, start = task
    walker = _SubsetWalker(n, max_weight)
    minimal = []
    for exponents in walker.run_prefix(prefix, start):
        s = ExponentSet(n, exponents)
        if is_minimal_vanishing(s, bounded=False):
            minimal.append(canonicalize(s).canonical.exponents)
    return minimal


def _split_tasks(n: int, max_weight: int, jobs: int) -> List[Tuple[int, int, Tuple[int, ...], int]]:
    if jobs <= 1:
        return [(n, max_weight, (), 1)]

    depth = min(_SPLIT_DEPTH, n - 1)
    tasks = []
    for mask in range(1 << depth):
        prefix = tuple(k + 1 for k in range(depth) if mask >> k & 1)
        if len(prefix) + 1 <= max_weight:
            tasks.append((n, max_weight, prefix, depth + 1))
    return tasks


def enumerate_minimal_sums(n: int,
                           max_weight: Optional[int] = None,
                           jobs: int = 1) -> List[RotationClass]:
    """Enumerate the rotation classes of minimal vanishing sums of distinct
    n-th roots of unity with at most `max_weight` terms.

    Only sets containing 0 are walked, since every class has such a member.
    Results are sorted by (weight, degree, exponents) and do not depend on
    `jobs`.

    Raises:
        InvalidInputException: n < 2 or max_weight < 1.
        InstanceTooLargeException: n > 42, or n > 30 with max_weight > 12.
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidInputException(f"enumeration needs n >= 2, got {n}")
    if max_weight is None:
        max_weight = n
    if max_weight < 1:
        raise InvalidInputException(
            f"max_weight must be positive, got {max_weight}")
    max_weight = min(max_weight, n)

    if n > CAPPED_ENUMERATION_LIMIT or (n > FULL_ENUMERATION_LIMIT and
                                        max_weight > CAPPED_ENUMERATION_WEIGHT):
        raise InstanceTooLargeException(
            f"enumeration for n={n} with max_weight={max_weight} exceeds "
            f"n<={FULL_ENUMERATION_LIMIT}, or n<={CAPPED_ENUMERATION_LIMIT} "
            f"with max_weight<={CAPPED_ENUMERATION_WEIGHT}")

    tasks = _split_tasks(n, max_weight, jobs)
    logger.info("enumerating minimal sums for n=%d, weight<=%d in %d tasks",
                n, max_weight, len(tasks))

    canonical = set()
    for found in run_tasks(_enumeration_task, tasks, jobs):
        canonical.update(found)

    classes = [RotationClass(n, ExponentSet(n, exponents), 0)
               for exponents in canonical]
    return sorted(classes, key=RotationClass.sort_key)
