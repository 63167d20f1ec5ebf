import unittest

from cyclosum.cyclotomic import (
    cyclotomic,
    cyclotomic_by_division,
    divisors,
    euler_phi,
    factorize,
    height,
    is_flat,
    is_prime,
    is_square_free,
    moebius,
    order,
    radical,
)
from cyclosum.exception import InvalidInputException
from cyclosum.polynomial import IntPolynomial, poly_mul

try:
    import sympy
except ImportError:  # pragma: no cover
    sympy = None


class TestArithmetic(unittest.TestCase):
    def test_factorize(self):
        result = factorize(360)
        self.assertEqual(((2, 3), (3, 2), (5, 1)), result.prime_powers)
        self.assertEqual((2, 3, 5), result.primes)
        self.assertEqual("2^3*3^2*5", str(result))
        self.assertEqual((), factorize(1).prime_powers)
        self.assertEqual("1", str(factorize(1)))
        self.assertEqual(((2, 12), (5, 12)), factorize(10**12).prime_powers)
        self.assertEqual(((999983, 1), ), factorize(999983).prime_powers)

    def test_factorize_invalid(self):
        for n in (0, -3, True, 2.0, 10**12 + 1):
            with self.assertRaises(InvalidInputException):
                factorize(n)

    def test_is_prime(self):
        primes = [n for n in range(30) if is_prime(n)]
        self.assertEqual([2, 3, 5, 7, 11, 13, 17, 19, 23, 29], primes)

    def test_divisors(self):
        self.assertEqual([1, 2, 3, 4, 6, 12], divisors(12))
        self.assertEqual([1], divisors(1))

    def test_euler_phi(self):
        self.assertEqual(1, euler_phi(1))
        self.assertEqual(8, euler_phi(30))
        self.assertEqual(48, euler_phi(210))
        self.assertEqual(96, euler_phi(97))

    def test_moebius(self):
        self.assertEqual(1, moebius(1))
        self.assertEqual(-1, moebius(30))
        self.assertEqual(1, moebius(6))
        self.assertEqual(0, moebius(12))

    def test_radical(self):
        self.assertEqual(30, radical(360))
        self.assertTrue(is_square_free(210))
        self.assertFalse(is_square_free(90))

    def test_order(self):
        self.assertEqual(0, order(2))
        self.assertEqual(1, order(14))
        self.assertEqual(2, order(30))
        self.assertEqual(3, order(210))


class TestCyclotomic(unittest.TestCase):
    def test_small(self):
        self.assertEqual(IntPolynomial((-1, 1)), cyclotomic(1))
        self.assertEqual(IntPolynomial((1, 1)), cyclotomic(2))
        self.assertEqual(IntPolynomial((1, -1, 1)), cyclotomic(6))
        self.assertEqual(IntPolynomial((1, 0, -1, 0, 1)), cyclotomic(12))
        self.assertEqual("x^6-x^5+x^4-x^3+x^2-x+1", str(cyclotomic(14)))
        self.assertEqual("x^8-x^7+x^5-x^4+x^3-x+1", str(cyclotomic(15)))
        self.assertEqual("x^8+x^7-x^5-x^4-x^3+x+1", str(cyclotomic(30)))

    def test_invalid(self):
        for n in (0, -1):
            with self.assertRaises(InvalidInputException):
                cyclotomic(n)

    def test_product_identity(self):
        for n in range(1, 201):
            product = IntPolynomial.one()
            for d in divisors(n):
                product = poly_mul(product, cyclotomic(d))
            expected = IntPolynomial.monomial(n) - IntPolynomial.one()
            self.assertEqual(expected, product, n)

    def test_shape(self):
        for n in range(2, 201):
            f = cyclotomic(n)
            self.assertEqual(euler_phi(n), f.degree, n)
            self.assertEqual(-moebius(n), f[1], n)
            self.assertEqual(f.coeffs, tuple(reversed(f.coeffs)), n)

    def test_shortcuts(self):
        for m in range(3, 100, 2):
            self.assertEqual(cyclotomic(m).negate_variable(), cyclotomic(2 * m),
                             m)
        for p, n in ((2, 2), (2, 6), (3, 3), (3, 15), (5, 10)):
            self.assertEqual(cyclotomic(n).compose_power(p), cyclotomic(p * n),
                             (p, n))

    def test_reference_path(self):
        for n in range(1, 121):
            self.assertEqual(cyclotomic_by_division(n), cyclotomic(n), n)

    def test_flatness_boundary(self):
        for n in range(2, 105):
            self.assertTrue(is_flat(n), n)
        self.assertEqual(2, height(105))
        self.assertFalse(is_flat(105))
        self.assertFalse(is_flat(210))
        self.assertEqual(cyclotomic(105).negate_variable(), cyclotomic(210))


@unittest.skipIf(sympy is None, "sympy is not installed")
class TestAgainstSympy(unittest.TestCase):
    def test_cyclotomic(self):
        x = sympy.Symbol("x")
        for n in range(1, 121):
            coeffs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
            expected = tuple(int(c) for c in reversed(coeffs))
            self.assertEqual(expected, cyclotomic(n).coeffs, n)

    def test_arithmetic(self):
        for n in range(1, 500):
            self.assertEqual(int(sympy.totient(n)), euler_phi(n), n)
            expected = tuple(sorted(
                (int(p), int(e)) for p, e in sympy.factorint(n).items()))
            self.assertEqual(expected, factorize(n).prime_powers, n)


if __name__ == "__main__":
    unittest.main()
