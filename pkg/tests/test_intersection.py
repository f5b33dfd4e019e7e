import unittest
from fractions import Fraction

from sympy import Symbol, expand

from hecke_afl.exceptions import InvalidInputError, UnimplementedRegimeError
from hecke_afl.intersection import (
    FundamentalMatrix,
    degree_cross_check,
    degree_Tm,
    divisor_degrees,
    fundamental_invariants,
    fundamental_matrix,
    hecke_degree,
    int_g_phi,
    int_g_phi_at,
    kr_pairing,
    quasi_canonical_degree,
)
from hecke_afl.localfield import FieldElement, PrimeConfig


class TestFundamentalInvariants(unittest.TestCase):
    def setUp(self):
        self.config = PrimeConfig(p=3)

    def element(self, value):
        return FieldElement.of(value, self.config)

    def diagonal(self, x, y):
        zero = self.element(0)
        return FundamentalMatrix(((self.element(x), zero), (zero, self.element(y))))

    def test_diagonal(self):
        self.assertEqual(fundamental_invariants(self.diagonal(1, 1)), (0, 0))
        self.assertEqual(fundamental_invariants(self.diagonal(1, 27)), (0, 3))
        self.assertEqual(self.diagonal(3, 9).invariants, (1, 2))

    def test_fundamental_matrix(self):
        # v(1 - 16) = 1
        a = self.element(4)
        for m in range(4):
            self.assertEqual(fundamental_matrix(a, m).invariants, (0, 2 * m + 1))

    def test_from_vectors(self):
        one, zero = self.element(1), self.element(0)
        matrix = FundamentalMatrix.from_vectors([(one, zero), (zero, one)], [1, 3])
        self.assertEqual(matrix.invariants, (0, 1))

    def test_rejects_bad_matrices(self):
        d = FieldElement.delta(self.config)
        one = self.element(1)
        with self.assertRaises(InvalidInputError):
            FundamentalMatrix(((one, d), (d, one)))
        with self.assertRaises(InvalidInputError):
            FundamentalMatrix(((one, one), (one, one)))
        with self.assertRaises(InvalidInputError):
            fundamental_matrix(one, -1)


class TestPairing(unittest.TestCase):
    def test_kr_pairing(self):
        self.assertEqual(kr_pairing((0, 1)), 1)
        self.assertEqual(kr_pairing((0, 3)), 2)
        self.assertEqual(kr_pairing((0, 9)), 5)

    def test_unimplemented_regimes(self):
        with self.assertRaises(UnimplementedRegimeError):
            kr_pairing((0, 2))
        with self.assertRaises(UnimplementedRegimeError):
            kr_pairing((1, 3))

    def test_int_g_phi(self):
        self.assertEqual(int_g_phi(1, 2).value, 1)
        self.assertEqual(int_g_phi(3, 0).value, 2)
        self.assertEqual(int_g_phi(5, 1).value, 1)
        for r in (1, 3, 5, 7, 9):
            self.assertEqual(int_g_phi(r, 0).value, Fraction(r + 1, 2))
            for m in range(1, 6):
                self.assertEqual(int_g_phi(r, m).value, 1)

    def test_int_g_phi_rejects(self):
        with self.assertRaises(InvalidInputError):
            int_g_phi(2, 0)
        with self.assertRaises(InvalidInputError):
            int_g_phi(-1, 1)
        with self.assertRaises(InvalidInputError):
            int_g_phi(1, -1)

    def test_telescoping(self):
        # sum of the differences recovers the pairing of p^m u_0
        for r in (1, 3, 5):
            for m in range(5):
                total = sum(int_g_phi(r, k).value for k in range(m + 1))
                self.assertEqual(total, kr_pairing((0, 2 * m + r)))

    def test_int_g_phi_at(self):
        config = PrimeConfig(p=3)
        for a, r in ((4, 1), (28, 3)):
            element = FieldElement.of(a, config)
            for m in range(4):
                result = int_g_phi_at(element, m)
                self.assertEqual(result.r, r)
                self.assertEqual(result.value, int_g_phi(r, m).value)
        self.assertEqual(int_g_phi(1, 2).as_dict(), {"r": 1, "m": 2, "int_value": "1/1"})


class TestDegrees(unittest.TestCase):
    def test_degree_Tm(self):
        self.assertEqual(degree_Tm(1, 3), 12)
        self.assertEqual(degree_Tm(2, 3), 108)
        q = Symbol("q")
        self.assertEqual(expand(degree_Tm(1, q) - q * (q + 1)), 0)
        with self.assertRaises(InvalidInputError):
            degree_Tm(0, 3)

    def test_hecke_degree(self):
        self.assertEqual(hecke_degree(0, 3), 1)
        self.assertEqual(hecke_degree(1, 3), 12)
        self.assertEqual(hecke_degree(2, 3), 108)
        for q in (5, 7):
            for m in range(1, 4):
                self.assertEqual(hecke_degree(m, q), degree_Tm(m, q))

    def test_quasi_canonical_degree(self):
        self.assertEqual(quasi_canonical_degree(0, 3), 1)
        self.assertEqual(quasi_canonical_degree(1, 3), 4)
        self.assertEqual(quasi_canonical_degree(2, 3), 12)
        with self.assertRaises(InvalidInputError):
            quasi_canonical_degree(-1, 3)

    def test_divisor_degrees(self):
        rows = divisor_degrees(4, 3)
        self.assertTrue(all(row["lhs"] == row["rhs"] for row in rows))
        self.assertEqual({row["m"] for row in rows}, set(range(5)))

    def test_divisor_degrees_symbolic(self):
        rows = divisor_degrees(3, Symbol("q"))
        self.assertEqual(len(rows), 12)

    def test_degree_cross_check(self):
        for m in (1, 2):
            record = degree_cross_check(m, 3)
            self.assertEqual(record["lattice_count"], degree_Tm(m, 3))


if __name__ == "__main__":
    unittest.main()
