"""Module for dense polynomials with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import (
    Iterable,
    Iterator,
    Sequence,
    Tuple,
)

from .exception import NonMonicDivisorException, ZeroDivisorException

__all__ = ["IntPolynomial", "poly_mul", "poly_divrem"]


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPolynomial:
    """
    IntPolynomial is an immutable dense polynomial over the integers. Index i
    of `coeffs` holds the coefficient of x^i, and trailing zeros are always
    trimmed, so the zero polynomial has no coefficients at all.

    Python integers never wrap, so every operation here is exact regardless of
    how large the coefficients grow.
    """
    coeffs: Tuple[int, ...]

    __slots__ = ("coeffs", )

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1, ))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        assert power >= 0
        return cls((0, ) * power + (coeff, ))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> IntPolynomial:
        """Build the 0,1-polynomial whose exponent set is `exponents`."""
        exponents = list(exponents)
        if not exponents:
            return cls.zero()
        coeffs = [0] * (max(exponents) + 1)
        for e in exponents:
            coeffs[e] = 1
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_zero_one(self) -> bool:
        return all(c in (0, 1) for c in self.coeffs)

    def exponents(self) -> Tuple[int, ...]:
        """Sorted exponents with a nonzero coefficient."""
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def height(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __call__(self, x: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] - other[i] for i in range(size)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __divmod__(self, other: IntPolynomial) -> Tuple[IntPolynomial, IntPolynomial]:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return poly_divrem(self, other)

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        assert k >= 0
        if self.is_zero():
            return self
        return IntPolynomial((0, ) * k + self.coeffs)

    def compose_power(self, p: int) -> IntPolynomial:
        """Substitute x -> x^p."""
        assert p >= 1
        if self.is_zero():
            return self
        coeffs = [0] * (self.degree * p + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * p] = c
        return IntPolynomial(coeffs)

    def negate_variable(self) -> IntPolynomial:
        """Substitute x -> -x."""
        return IntPolynomial(
            tuple(-c if i % 2 else c for i, c in enumerate(self.coeffs)))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue

            if c < 0:
                sign = "-"
            elif terms:
                sign = "+"
            else:
                sign = ""

            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                prefix = "" if magnitude == 1 else str(magnitude)
                if power == 1:
                    body = f"{prefix}x"
                else:
                    body = f"{prefix}x^{power}"
            terms.append(f"{sign}{body}")

        return "".join(terms)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact product of two polynomials by direct convolution."""
    if a.is_zero() or b.is_zero():
        return IntPolynomial.zero()

    result = [0] * (a.degree + b.degree + 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            result[i + j] += x * y
    return IntPolynomial(result)


def poly_divrem(a: IntPolynomial,
                b: IntPolynomial) -> Tuple[IntPolynomial, IntPolynomial]:
    """Divide `a` by the monic polynomial `b`.

    Returns:
        Pair (quotient, remainder) with a = b * quotient + remainder and
        deg(remainder) < deg(b).

    Raises:
        ZeroDivisorException: `b` is the zero polynomial.
        NonMonicDivisorException: leading coefficient of `b` is not 1.
    """
    if b.is_zero():
        raise ZeroDivisorException("division by the zero polynomial")
    if not b.is_monic():
        raise NonMonicDivisorException(
            f"divisor {b} has leading coefficient {b.leading}")

    if a.degree < b.degree:
        return IntPolynomial.zero(), a

    remainder = list(a.coeffs)
    quotient = [0] * (a.degree - b.degree + 1)
    divisor: Sequence[int] = b.coeffs
    db = b.degree
    for k in range(a.degree - db, -1, -1):
        c = remainder[k + db]
        if c == 0:
            continue
        quotient[k] = c
        for j, d in enumerate(divisor):
            if d:
                remainder[k + j] -= c * d

    return IntPolynomial(quotient), IntPolynomial(remainder[:db])
