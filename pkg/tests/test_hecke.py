import unittest
from fractions import Fraction
from random import Random

from hecke_afl.exceptions import InvalidInputError, RankMismatchError
from hecke_afl.hecke import (
    GLHecke,
    SModuleElement,
    UHecke,
    atomic_coefficients,
    atomic_phi,
    atomic_phi_symbolic,
    bc,
    bc_S_eta,
    bc_S_eta_inverse,
    chi_rho,
    convolve,
    eta_twist,
    fbracket_coordinates,
    interpolation_degree,
    m_count_polynomial,
    phi_combination,
    phi_coordinates,
    qbinom,
    r_eta_star,
    r_eta_star_combination,
    r_eta_star_indicator,
    sat_f_bracket,
    sat_gl2_fprime,
    sat_gl2_indicator,
    sat_gl_minuscule,
    sat_u2_f,
    sat_u2_phi,
    tilde_coordinates,
)
from hecke_afl.symfun import GLSatakeElement, Q, USatakeElement, qlaurent


def _gl_sigma(n, s):
    return GLHecke(n, GLSatakeElement.sigma(n, s))


def _random_gl(rng, n):
    sat = GLSatakeElement.constant(n, 0)
    for _ in range(3):
        term = GLSatakeElement.constant(n, Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
        for i in range(1, n):
            term = term * GLSatakeElement.sigma(n, i) ** rng.randint(0, 1)
        term = term * GLSatakeElement.sigma(n, n) ** rng.randint(-1, 1)
        if rng.random() < 0.5:
            term = term * qlaurent(Q)
        sat = sat + term
    return GLHecke(n, sat)


def _u(n, text):
    return UHecke(n, USatakeElement.from_text(n, text))


class TestGLHecke(unittest.TestCase):
    def test_minuscule(self):
        self.assertEqual(sat_gl_minuscule(2, 0), GLHecke.one(2))
        self.assertEqual(str(sat_gl_minuscule(2, 1)), "q*sigma1")
        self.assertEqual(str(sat_gl_minuscule(3, 1)), "q^2*sigma1")
        self.assertEqual(str(sat_gl_minuscule(2, 2)), "sigma2")
        with self.assertRaises(InvalidInputError):
            sat_gl_minuscule(2, 3)

    def test_fprime(self):
        self.assertEqual(sat_gl2_fprime(0), GLHecke.one(2))
        self.assertEqual(str(sat_gl2_fprime(1)), "q*sigma1")
        self.assertEqual(str(sat_gl2_fprime(2)), "q^2*sigma1^2 - q^2*sigma2")

    def test_indicator(self):
        self.assertEqual(sat_gl2_indicator(1), sat_gl2_fprime(1))
        self.assertEqual(sat_gl2_indicator(2), sat_gl2_fprime(2) - _gl_sigma(2, 2))

    def test_eta_twist(self):
        self.assertEqual(eta_twist(_gl_sigma(2, 1)), -_gl_sigma(2, 1))
        self.assertEqual(eta_twist(_gl_sigma(2, 2)), _gl_sigma(2, 2))
        element = sat_gl2_fprime(3) + sat_gl_minuscule(2, 1)
        self.assertEqual(eta_twist(eta_twist(element)), element)

    def test_rank_mismatch(self):
        with self.assertRaises(RankMismatchError):
            convolve(GLHecke.one(2), GLHecke.one(3))


class TestUnitaryHecke(unittest.TestCase):
    def test_u2_closed_forms(self):
        self.assertEqual(str(sat_u2_f(1)), "q*s1 + q")
        self.assertEqual(str(sat_u2_phi(1)), "q*s1 + q - 1")
        self.assertEqual(sat_u2_phi(0), UHecke.one(2))

    def test_f_m_sums_powers(self):
        for m in range(6):
            value = sat_u2_f(m).sat.evaluate([2], q_value=3)
            expected = 3**m * sum(2**i for i in range(-m, m + 1))
            self.assertEqual(value, expected)

    def test_qbinom(self):
        self.assertEqual(qbinom(2, 1), qlaurent(1 + Q))
        self.assertEqual(qbinom(4, 2), qlaurent((Q**2 + 1) * (Q**2 + Q + 1)))
        self.assertEqual(qbinom(2, 1, "-q"), qlaurent(1 - Q))
        with self.assertRaises(InvalidInputError):
            qbinom(2, 3)

    def test_chi_rho(self):
        self.assertEqual(chi_rho(3, 1), USatakeElement.from_text(3, "s1 + 1"))
        self.assertEqual(chi_rho(2, 1), USatakeElement.from_text(2, "s1"))
        self.assertEqual(chi_rho(4, 2), USatakeElement.from_text(4, "s2 + 2"))
        self.assertEqual(chi_rho(5, 2), USatakeElement.from_text(5, "s2 + s1 + 2"))

    def test_f_bracket(self):
        self.assertEqual(sat_f_bracket(2, 2), sat_u2_phi(1))
        self.assertEqual(sat_f_bracket(4, 0), UHecke.one(4))
        expected = _u(3, "q^2*s1 + q^2") - UHecke.one(3).scale(qbinom(3, 1, "-q"))
        self.assertEqual(sat_f_bracket(3, 2), expected)
        with self.assertRaises(InvalidInputError):
            sat_f_bracket(4, 3)

    def test_f_bracket_leading_terms(self):
        for n in range(2, 7):
            expected = _u(n, f"q^{n - 1}*s1") - UHecke.one(n).scale(qbinom(n, 1, "-q"))
            if n % 2:
                expected = expected + UHecke.one(n).scale(Q ** (n - 1))
            self.assertEqual(sat_f_bracket(n, 2), expected)

    def test_fbracket_coordinates(self):
        element = sat_f_bracket(4, 4) + sat_f_bracket(4, 2).scale(Q) + UHecke.one(4).scale(3)
        self.assertEqual(fbracket_coordinates(element), {4: qlaurent(1), 2: qlaurent(Q), 0: qlaurent(3)})

    def test_atomic_relation(self):
        atomic = sat_u2_phi(1) + UHecke.one(2).scale(Q + 1)
        for m in range(2, 7):
            expected = phi_combination({m + 1: 1, m: 2 * Q, m - 1: Q**2})
            self.assertEqual(atomic * sat_u2_phi(m), expected)
        self.assertEqual(
            atomic * sat_u2_phi(1),
            phi_combination({2: 1, 1: 2 * Q, 0: Q**2 + Q}),
        )

    def test_phi_coordinates(self):
        element = sat_u2_f(1) * sat_u2_f(1)
        coords = phi_coordinates(element)
        self.assertEqual(phi_combination(coords), element)
        self.assertEqual(coords[2], qlaurent(1))

    def test_commutative(self):
        a, b = sat_u2_phi(2), sat_u2_f(3) + sat_u2_phi(1)
        self.assertEqual(convolve(a, b), convolve(b, a))
        self.assertEqual(UHecke.one(2) * a, a)


class TestBaseChange(unittest.TestCase):
    def test_sigma1_even(self):
        self.assertEqual(bc(_gl_sigma(2, 1)), _u(2, "s1"))

    def test_fprime_to_f(self):
        for m in range(1, 9):
            self.assertEqual(bc(sat_gl2_fprime(m) + sat_gl2_fprime(m - 1).scale(Q)), sat_u2_f(m))

    def test_sigma_to_chi_rho(self):
        for n in range(1, 7):
            for s in range(n // 2 + 1):
                self.assertEqual(bc(_gl_sigma(n, s)), UHecke(n, chi_rho(n, s)))

    def test_homomorphism(self):
        a = sat_gl2_fprime(2) + _gl_sigma(2, 1)
        b = sat_gl_minuscule(2, 2) + GLHecke.one(2).scale(Q)
        self.assertEqual(bc(a * b), bc(a) * bc(b))
        c = _gl_sigma(3, 1) * _gl_sigma(3, 2)
        self.assertEqual(bc(c), bc(_gl_sigma(3, 1)) * bc(_gl_sigma(3, 2)))

    def test_homomorphism_random_pairs(self):
        rng = Random(41)
        for index in range(100):
            n = 1 + index % 4
            a, b = _random_gl(rng, n), _random_gl(rng, n)
            self.assertEqual(bc(a * b), bc(a) * bc(b))
            self.assertEqual(bc(a + b), bc(a) + bc(b))


class TestSModule(unittest.TestCase):
    def test_r_eta_star(self):
        self.assertEqual(r_eta_star(0), SModuleElement.basis(0))
        self.assertEqual(r_eta_star(1), SModuleElement({1: -1, 0: -(1 + Q)}))
        self.assertEqual(r_eta_star(2), SModuleElement({2: 1, 1: 1 + Q, 0: 1 + Q + Q**2}))

    def test_indicator_image(self):
        for m in range(2, 7):
            self.assertEqual(r_eta_star_indicator(m), r_eta_star_combination({m: 1, m - 2: -1}))
        self.assertEqual(r_eta_star_indicator(1), r_eta_star(1))

    def test_tilde_basis(self):
        self.assertEqual(bc_S_eta_inverse(0), SModuleElement.basis(0))
        self.assertEqual(bc_S_eta_inverse(1), SModuleElement({1: -1, 0: -2}))
        self.assertEqual(bc_S_eta_inverse(2), SModuleElement({2: 1, 1: 2, 0: 2}))

    def test_image_of_fprime_combination(self):
        for m in range(0, 9):
            combination = r_eta_star_combination({m: 1, m - 1: Q - 1, m - 2: -Q})
            self.assertEqual(combination, bc_S_eta_inverse(m))

    def test_bc_s_eta(self):
        for m in range(7):
            self.assertEqual(bc_S_eta(bc_S_eta_inverse(m)), sat_u2_phi(m))
        element = SModuleElement({0: 1, 3: Q})
        self.assertEqual(
            sum((bc_S_eta_inverse(k).scale(c) for k, c in tilde_coordinates(element).items()), SModuleElement({})),
            element,
        )

    def test_negative_index(self):
        with self.assertRaises(InvalidInputError):
            SModuleElement({-1: 1})


class TestAtomic(unittest.TestCase):
    def test_trivial(self):
        self.assertEqual(atomic_phi(2, 0, 3), UHecke.one(2))
        self.assertEqual(atomic_coefficients(3, 0, 3), {0: 1})

    def test_rank_two(self):
        phi = atomic_phi(2, 2, 3)
        self.assertEqual(phi.basis_coeffs, {0: 4, 2: 1})
        self.assertEqual(phi.named_text(), "f[2] + 4*f[0]")
        expected = (sat_u2_phi(1) + UHecke.one(2).scale(4)).sat.specialize_q(3)
        self.assertEqual(phi, UHecke(2, expected))

    def test_interpolation_degree(self):
        self.assertEqual(interpolation_degree(2, 0, 2), 1)
        self.assertEqual(interpolation_degree(4, 0, 4), 4)
        self.assertEqual(interpolation_degree(4, 0, 2), 5)
        self.assertEqual(interpolation_degree(4, 2, 4), 1)

    def test_symbolic_rank_two(self):
        phi = atomic_phi_symbolic(2, 2)
        self.assertEqual(phi.named_text(), "f[2] + (q + 1)*f[0]")
        self.assertEqual(phi, sat_u2_phi(1) + UHecke.one(2).scale(Q + 1))

    def test_m_count_polynomial(self):
        self.assertEqual(m_count_polynomial(2, 0, 2), qlaurent(Q + 1))
        self.assertEqual(m_count_polynomial(2, 0, 2, primes=[3, 5, 7, 11]), qlaurent(Q + 1))
        with self.assertRaises(InvalidInputError):
            m_count_polynomial(2, 0, 2, primes=[3, 5])

    def test_rejects_odd_t(self):
        with self.assertRaises(InvalidInputError):
            atomic_phi(3, 1, 3)


if __name__ == "__main__":
    unittest.main()
