"""Module for arithmetic functions and cyclotomic polynomials."""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .config import FACTORIZE_LIMIT
from .exception import InvalidInputException
from .polynomial import IntPolynomial, poly_divrem, poly_mul

__all__ = [
    "Factorization",
    "cyclotomic",
    "cyclotomic_by_division",
    "divisors",
    "euler_phi",
    "factorize",
    "height",
    "is_flat",
    "is_prime",
    "is_square_free",
    "moebius",
    "order",
    "radical",
]


@dataclass(frozen=True)
class Factorization:
    """
    Factorization of a positive integer into sorted (prime, exponent) pairs.
    The factorization of 1 is the empty product.
    """
    n: int
    prime_powers: Tuple[Tuple[int, int], ...]

    __slots__ = ("n", "prime_powers")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)

    def __str__(self) -> str:
        if not self.prime_powers:
            return "1"
        return "*".join(str(p) if e == 1 else f"{p}^{e}"
                        for p, e in self.prime_powers)


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputException(f"expected an integer, got {n!r}")
    if n < 1:
        raise InvalidInputException(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096, typed=True)
def factorize(n: int) -> Factorization:
    """Factorize n by trial division.

    Raises:
        InvalidInputException: n is not a positive integer up to 10^12.
    """
    _check_positive(n)
    if n > FACTORIZE_LIMIT:
        raise InvalidInputException(
            f"{n} exceeds the trial division limit {FACTORIZE_LIMIT}")

    prime_powers: List[Tuple[int, int]] = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            prime_powers.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        prime_powers.append((m, 1))

    return Factorization(n, tuple(prime_powers))


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    return factorize(n).prime_powers == ((n, 1), )


def divisors(n: int) -> List[int]:
    result = [1]
    for p, e in factorize(n).prime_powers:
        result = [d * p**k for d in result for k in range(e + 1)]
    return sorted(result)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).prime_powers:
        result = result // p * (p - 1)
    return result


def moebius(n: int) -> int:
    prime_powers = factorize(n).prime_powers
    if any(e > 1 for _, e in prime_powers):
        return 0
    return -1 if len(prime_powers) % 2 else 1


def radical(n: int) -> int:
    """Largest square-free divisor of n."""
    result = 1
    for p in factorize(n).primes:
        result *= p
    return result


def is_square_free(n: int) -> bool:
    return radical(n) == n


def order(n: int) -> int:
    """Number of distinct odd prime factors of n."""
    return sum(1 for p in factorize(n).primes if p != 2)


@lru_cache(maxsize=1024)
def cyclotomic_by_division(n: int) -> IntPolynomial:
    """Compute Phi_n as (x^n - 1) divided by the product of Phi_d over the
    proper divisors d of n. Uses no identity other than
    x^n - 1 = prod_{d | n} Phi_d(x).
    """
    _check_positive(n)
    product = IntPolynomial.one()
    for d in divisors(n)[:-1]:
        product = poly_mul(product, cyclotomic_by_division(d))

    numerator = IntPolynomial.monomial(n) - IntPolynomial.one()
    quotient, remainder = poly_divrem(numerator, product)
    assert remainder.is_zero()
    return quotient


@lru_cache(maxsize=4096)
def cyclotomic(n: int) -> IntPolynomial:
    """Compute the n-th cyclotomic polynomial.

    Reduces n with Phi_{pm}(x) = Phi_m(x^p) when p | m and with
    Phi_{2m}(x) = Phi_m(-x) when m is odd, then divides for the odd
    square-free core.
    """
    _check_positive(n)
    if n == 1:
        return IntPolynomial((-1, 1))

    for p, e in factorize(n).prime_powers:
        if e > 1:
            return cyclotomic(n // p).compose_power(p)

    if n % 2 == 0 and n > 2:
        return cyclotomic(n // 2).negate_variable()

    return cyclotomic_by_division(n)


def height(n: int) -> int:
    """Largest absolute coefficient of Phi_n."""
    return cyclotomic(n).height()


def is_flat(n: int) -> bool:
    return height(n) == 1
