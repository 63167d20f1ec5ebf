"""Module for enumerating polynomial multiples with small coefficients.

Every multiple f = Phi * g of a monic divisor Phi with Phi(0) = 1 and
deg f = d is fixed by its low coefficients c_0..c_m, m = d - deg Phi: the
quotient coefficients follow as g_k = c_k - t_k, where t_k is the part of
c_k already produced by g_0..g_{k-1}. The remaining coefficients
c_{m+1}..c_d are then linear forms in c_0..c_m. The search branches on
c_0..c_m over the coefficient alphabet and prunes a branch as soon as one of
those forced forms can no longer land in the alphabet.
"""

from typing import (
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)
import logging

from .config import DFS_DEPTH_LIMIT
from .debugger import debugger
from .exception import InstanceTooLargeException, InvalidInputException
from .parallel import run_tasks
from .polynomial import IntPolynomial

__all__ = ["MultipleSearch", "search_multiples"]

logger = logging.getLogger(__name__)

# branch decisions fixed per worker task
_SPLIT_DEPTH = 8

Coefficients = Tuple[int, ...]


def _inverse_series(divisor: Sequence[int], length: int) -> List[int]:
    """First `length` coefficients of 1/divisor as a power series."""
    psi = [0] * length
    if length:
        psi[0] = 1
    for i in range(1, length):
        acc = 0
        for t in range(1, min(i, len(divisor) - 1) + 1):
            acc += divisor[t] * psi[i - t]
        psi[i] = -acc
    return psi


@debugger
class MultipleSearch:
    """
    Enumerate the multiples of `divisor` of exact degree `degree` whose
    coefficients all lie in `alphabet`, with leading coefficient nonzero and,
    when `require_constant_term` is set, constant coefficient 1.
    """
    def __init__(self,
                 divisor: IntPolynomial,
                 alphabet: Sequence[int],
                 degree: int,
                 require_constant_term: bool = True) -> None:
        if not divisor.is_monic() or divisor[0] != 1:
            raise InvalidInputException(
                f"divisor {divisor} must be monic with constant term 1")
        if degree < divisor.degree:
            raise InvalidInputException(
                f"degree {degree} is below the divisor degree {divisor.degree}")

        self.divisor = divisor
        self.alphabet = tuple(sorted(set(alphabet)))
        self.degree = degree
        self.free = degree - divisor.degree + 1
        if self.free - 1 > DFS_DEPTH_LIMIT:
            raise InstanceTooLargeException(
                f"quotient degree {self.free - 1} exceeds the DFS bound "
                f"{DFS_DEPTH_LIMIT}")

        if require_constant_term:
            first = (1, )
        else:
            first = self.alphabet
        self.domains = [first] + [self.alphabet] * (self.free - 1)
        self.leading = tuple(a for a in self.alphabet if a != 0)

        self._build_forms()
        self._build_bounds()

    def _build_forms(self) -> None:
        """forms[j][l]: weight of c_l in the forced coefficient c_{m+1+j}."""
        phi = self.divisor.coeffs
        deg = self.divisor.degree
        m = self.free - 1
        psi = _inverse_series(phi, self.free)

        self.forms = []
        for j in range(m + 1, self.degree + 1):
            row = []
            for l in range(m + 1):
                acc = 0
                for i in range(max(l, j - deg), m + 1):
                    acc += psi[i - l] * phi[j - i]
                row.append(acc)
            self.forms.append(row)

        # columns, for updating every forced coefficient at once
        self.columns = [tuple(row[l] for row in self.forms)
                        for l in range(m + 1)]

    def _build_bounds(self) -> None:
        count = len(self.forms)
        self.upper = [[0] * count for _ in range(self.free + 1)]
        self.lower = [[0] * count for _ in range(self.free + 1)]
        for l in range(self.free - 1, -1, -1):
            domain = self.domains[l]
            for j, w in enumerate(self.columns[l]):
                values = [w * a for a in domain]
                self.upper[l][j] = self.upper[l + 1][j] + max(values)
                self.lower[l][j] = self.lower[l + 1][j] + min(values)

        low, high = self.alphabet[0], self.alphabet[-1]
        self.targets = [(low, high)] * count
        self.targets[-1] = (min(self.leading), max(self.leading))

    def _feasible(self, l: int, partial: Sequence[int]) -> bool:
        upper = self.upper[l]
        lower = self.lower[l]
        for j, (low, high) in enumerate(self.targets):
            value = partial[j]
            if value + lower[j] > high or value + upper[j] < low:
                return False
        return True

    def _accepts(self, partial: Sequence[int]) -> bool:
        alphabet = self.alphabet
        for value in partial[:-1]:
            if value not in alphabet:
                return False
        return partial[-1] in self.leading

    def run(self, prefix: Sequence[int] = ()) -> List[Coefficients]:
        """All multiples whose first coefficients equal `prefix`, as
        coefficient tuples c_0..c_d."""
        partial = [0] * len(self.forms)
        chosen: List[int] = []
        for l, a in enumerate(prefix):
            if a not in self.domains[l]:
                return []
            chosen.append(a)
            for j, w in enumerate(self.columns[l]):
                partial[j] += a * w
        return list(self._walk(len(chosen), chosen, partial))

    def _walk(self, l: int, chosen: List[int],
              partial: List[int]) -> Iterator[Coefficients]:
        if not self._feasible(l, partial):
            return

        if l == self.free:
            if self._accepts(partial):
                yield tuple(chosen) + tuple(partial)
            return

        column = self.columns[l]
        for a in self.domains[l]:
            if a:
                for j, w in enumerate(column):
                    partial[j] += a * w
            chosen.append(a)
            yield from self._walk(l + 1, chosen, partial)
            chosen.pop()
            if a:
                for j, w in enumerate(column):
                    partial[j] -= a * w

    def prefixes(self, depth: int) -> List[Coefficients]:
        """Every assignment of the first `depth` free coefficients."""
        result: List[Coefficients] = [()]
        for l in range(min(depth, self.free)):
            result = [p + (a, ) for p in result for a in self.domains[l]]
        return result


def _search_task(task: Tuple[Coefficients, Coefficients, int, bool, Coefficients]) -> List[Coefficients]:
    divisor, alphabet, degree, require_constant_term, prefix = task
    engine = MultipleSearch(IntPolynomial(divisor), alphabet, degree,
                            require_constant_term)
    return engine.run(prefix)


def search_multiples(divisor: IntPolynomial,
                     alphabet: Sequence[int],
                     degree: int,
                     require_constant_term: bool = True,
                     jobs: int = 1,
                     split_depth: Optional[int] = None) -> List[Coefficients]:
    """Sorted coefficient tuples of every multiple of `divisor` of exact
    degree `degree` with coefficients in `alphabet`.

    Raises:
        InstanceTooLargeException: the quotient degree exceeds 40.
    """
    engine = MultipleSearch(divisor, alphabet, degree, require_constant_term)
    if jobs <= 1:
        results = engine.run()
    else:
        depth = _SPLIT_DEPTH if split_depth is None else split_depth
        tasks = [(divisor.coeffs, engine.alphabet, degree,
                  require_constant_term, prefix)
                 for prefix in engine.prefixes(depth)]
        results = [f for found in run_tasks(_search_task, tasks, jobs)
                   for f in found]

    logger.debug("degree %d: %d multiples of %s", degree, len(results),
                 divisor)
    return sorted(results)
