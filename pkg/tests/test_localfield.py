import unittest
from fractions import Fraction
from random import Random

from hecke_afl.exceptions import FieldDivisionError, InvalidInputError, PrecisionError
from hecke_afl.localfield import (
    VAL_INFINITY,
    FieldElement,
    PrimeConfig,
    TruncatedElement,
    determinant,
    eta,
    eta_tilde_det,
    format_fraction,
    rational_valuation,
    smallest_nonresidue,
    solve_norm,
)


def _random_unit_int(rng, p):
    while True:
        value = rng.randint(1, 10**6)
        if value % p:
            return value


def _random_element(rng, config):
    def part():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 30))

    return FieldElement(part(), part(), config)


class TestPrimeConfig(unittest.TestCase):
    def test_default_epsilon_is_smallest_nonresidue(self):
        self.assertEqual(PrimeConfig(p=3).epsilon, 2)
        self.assertEqual(PrimeConfig(p=5).epsilon, 2)
        self.assertEqual(PrimeConfig(p=7).epsilon, 3)
        self.assertEqual(smallest_nonresidue(11), 2)

    def test_rejects_even_and_composite(self):
        for bad in (2, 4, 9, 1):
            with self.assertRaises(InvalidInputError):
                PrimeConfig(p=bad)

    def test_rejects_square_epsilon(self):
        with self.assertRaises(InvalidInputError):
            PrimeConfig(p=5, epsilon=4)

    def test_q_equals_p(self):
        self.assertEqual(PrimeConfig(p=7).q, 7)


class TestFieldElement(unittest.TestCase):
    def setUp(self):
        self.config = PrimeConfig(p=3)
        self.d = FieldElement.delta(self.config)

    def test_delta_squares_to_epsilon(self):
        self.assertEqual(self.d * self.d, 2)

    def test_norm_and_trace(self):
        z = FieldElement(1, 1, self.config)
        self.assertEqual(z.norm(), -1)
        self.assertEqual(z.trace(), 2)
        self.assertEqual(z * z.conj(), z.norm())

    def test_inverse(self):
        z = FieldElement(Fraction(1, 3), 2, self.config)
        self.assertEqual(z * z.inverse(), 1)
        with self.assertRaises(FieldDivisionError):
            FieldElement.of(0, self.config).inverse()

    def test_valuation(self):
        self.assertEqual(FieldElement.of(Fraction(9, 2), self.config).valuation(), 2)
        self.assertEqual(FieldElement(Fraction(1, 3), 3, self.config).valuation(), -1)
        self.assertEqual(FieldElement.of(0, self.config).valuation(), VAL_INFINITY)
        self.assertEqual(rational_valuation(Fraction(5, 27), 3), -3)

    def test_parse(self):
        z = FieldElement.parse("1/2 + 3*d", self.config)
        self.assertEqual(z.x, Fraction(1, 2))
        self.assertEqual(z.y, 3)
        self.assertEqual(FieldElement.parse("d^2", self.config), 2)
        self.assertEqual(FieldElement.parse("1/(1 + d)", self.config), (1 + self.d).inverse())
        self.assertEqual(FieldElement.parse("d^-1", self.config), self.d.inverse())
        with self.assertRaises(InvalidInputError):
            FieldElement.parse("x + d", self.config)
        with self.assertRaises(InvalidInputError):
            FieldElement.parse("1 +", self.config)

    def test_parse_rejects_non_finite_and_foreign_input(self):
        for text in ("1/0", "d/(d - d)", "1/(d^2 - 2)", "(1", "2.5", "__import__('os')", "d(2)", ""):
            with self.subTest(text=text), self.assertRaises(InvalidInputError):
                FieldElement.parse(text, self.config)

    def test_hash_agrees_with_equality(self):
        two = FieldElement.of(2, self.config)
        self.assertEqual(two, 2)
        self.assertEqual(hash(two), hash(2))
        self.assertEqual(hash(FieldElement.of(Fraction(1, 2), self.config)), hash(Fraction(1, 2)))
        self.assertEqual(len({two, 2, Fraction(2)}), 1)
        self.assertIn(self.d, {self.d, two})

    def test_conj_is_multiplicative(self):
        rng = Random(17)
        for _ in range(1000):
            a, b = _random_element(rng, self.config), _random_element(rng, self.config)
            self.assertEqual((a * b).conj(), a.conj() * b.conj())

    def test_eta(self):
        self.assertEqual(eta(FieldElement.of(3, self.config)), -1)
        self.assertEqual(eta(FieldElement.of(Fraction(2, 9), self.config)), 1)
        with self.assertRaises(InvalidInputError):
            eta(self.d)

    def test_mixed_configs_rejected(self):
        other = FieldElement.of(1, PrimeConfig(p=5))
        with self.assertRaises(InvalidInputError):
            _ = self.d + other

    def test_determinant(self):
        one = FieldElement.of(1, self.config)
        three = FieldElement.of(3, self.config)
        matrix = [[one, self.d], [self.d.conj(), three]]
        # 3 - d * (-d) = 3 + 2
        self.assertEqual(determinant(matrix), 5)
        self.assertEqual(eta_tilde_det([[three, 0 * one], [0 * one, one]]), -1)

    def test_format_fraction(self):
        self.assertEqual(format_fraction(Fraction(3)), "3/1")
        self.assertEqual(format_fraction(Fraction(-2, 6)), "-1/3")


class TestTruncatedElement(unittest.TestCase):
    def setUp(self):
        self.config = PrimeConfig(p=3, precision=10)

    def test_solve_norm(self):
        for target in (1, 2, 5, Fraction(7, 4)):
            c = solve_norm(target, 10, self.config)
            self.assertTrue(c.norm().agrees_with(FieldElement.of(target, self.config)))

    def test_solve_norm_random_units(self):
        rng = Random(23)
        for _ in range(100):
            target = Fraction(rng.choice((-1, 1)) * _random_unit_int(rng, 3), _random_unit_int(rng, 3))
            c = solve_norm(target, 10, self.config)
            self.assertTrue(c.norm().agrees_with(FieldElement.of(target, self.config)), target)

    def test_solve_norm_rejects_nonunit(self):
        with self.assertRaises(InvalidInputError):
            solve_norm(3, 10, self.config)

    def test_valuation_beyond_precision(self):
        value = TruncatedElement.from_exact(FieldElement.of(3**12, self.config), 4)
        self.assertEqual(value.valuation(), 12)
        zero = value - FieldElement.of(3**12, self.config)
        with self.assertRaises(PrecisionError):
            zero.valuation()

    def test_sum_keeps_lowest_shift(self):
        a = TruncatedElement.from_exact(FieldElement.of(9, self.config), 5)
        b = TruncatedElement.from_exact(FieldElement.of(1, self.config), 5)
        self.assertEqual((a + b).valuation(), 0)
        self.assertTrue((a + b).agrees_with(FieldElement.of(10, self.config)))


if __name__ == "__main__":
    unittest.main()
