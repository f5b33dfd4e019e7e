import unittest
from fractions import Fraction
from random import Random

from hecke_afl.exceptions import (
    InvalidInputError,
    NotNormalizedError,
    NotRegularSemisimpleError,
)
from hecke_afl.hecke import r_eta_star
from hecke_afl.localfield import FieldElement, PrimeConfig, eta_tilde_det
from hecke_afl.orbital import (
    CLOSED,
    NONSPLIT,
    ORACLE,
    SPLIT,
    OrbitalValue,
    homogeneous_lift,
    homogeneous_orb_oracle,
    iwasawa_weight,
    make_gamma,
    match_class,
    matched_unitary,
    orb_S,
    orb_S_closed,
    orb_S_combination,
    orb_S_oracle,
    orb_S_tilde,
    orb_U_support,
    orbit_record,
    sample_orbit,
    symmetric_image,
    transfer_factor,
)


def _value(coefficients):
    return OrbitalValue.from_coefficients(coefficients)


class OrbitCase(unittest.TestCase):
    def setUp(self):
        self.config = PrimeConfig(p=3)

    def gamma(self, a, b):
        return make_gamma(FieldElement.of(a, self.config), FieldElement.of(b, self.config))


class TestOrbits(OrbitCase):
    def test_invariant_r(self):
        # 1 - 16 = -15
        orbit = self.gamma(4, 3)
        self.assertEqual(orbit.r, 1)
        self.assertTrue(orbit.normalized)
        self.assertEqual(self.gamma(Fraction(1, 3), Fraction(1, 9)).r, -2)
        self.assertEqual(self.gamma(28, 27).r, 3)

    def test_not_normalized(self):
        orbit = self.gamma(4, 1)
        self.assertFalse(orbit.normalized)
        with self.assertRaises(NotNormalizedError):
            orb_S_closed(orbit, 0)
        self.assertEqual(orb_S(orbit, 0, ORACLE), orb_S_oracle(orbit, 0))

    def test_not_regular_semisimple(self):
        with self.assertRaises(NotRegularSemisimpleError):
            self.gamma(2, 0)
        with self.assertRaises(NotRegularSemisimpleError):
            self.gamma(1, 3)

    def test_match_class(self):
        self.assertEqual(match_class(self.gamma(4, 3)), NONSPLIT)
        self.assertEqual(match_class(self.gamma(Fraction(1, 3), Fraction(1, 9))), SPLIT)

    def test_transfer_factor(self):
        self.assertEqual(transfer_factor(self.gamma(4, 3)), -1)
        self.assertEqual(transfer_factor(self.gamma(4, 9)), 1)

    def test_sample_orbit(self):
        rng = Random(0)
        for r in (-4, -2, 0, 1, 2, 3, 6):
            orbit = sample_orbit(self.config, rng, r)
            self.assertEqual(orbit.r, r)
            self.assertTrue(orbit.normalized)
        with self.assertRaises(InvalidInputError):
            sample_orbit(self.config, rng, -3)

    def test_sample_orbit_is_seeded(self):
        first = sample_orbit(self.config, Random(7), 2)
        second = sample_orbit(self.config, Random(7), 2)
        self.assertEqual(first, second)


class TestOrbitalValue(unittest.TestCase):
    def test_value_and_derivative(self):
        value = _value({-1: 2, 3: -1})
        self.assertEqual(value.value_at_0(), 1)
        self.assertEqual(value.derivative_at_0(), 5)
        self.assertEqual(value.substitute_square().coefficients(), {-2: 2, 6: -1})

    def test_rejects_fractional_coefficient(self):
        with self.assertRaises(InvalidInputError):
            _value({0: Fraction(1, 2)})

    def test_zero(self):
        self.assertFalse(OrbitalValue.zero())
        self.assertEqual(_value({1: 1}) - _value({1: 1}), OrbitalValue.zero())

    def test_as_dict(self):
        record = _value({0: 1, 1: -1}).as_dict()
        self.assertEqual(record["value0"], "0/1")
        self.assertEqual(record["dvalue0_logq"], "1/1")


class TestOrbitalIntegrals(OrbitCase):
    def test_closed_form_examples(self):
        orbit = self.gamma(4, 3)
        self.assertEqual(orb_S(orbit, 0), _value({0: 1, 1: -1}))
        self.assertEqual(orb_S(orbit, 1), _value({-1: -1, 2: 1}))
        negative = self.gamma(Fraction(1, 3), Fraction(1, 9))
        self.assertEqual(orb_S(negative, 0), OrbitalValue.zero())
        self.assertEqual(orb_S(negative, 1), _value({-1: -1}))
        self.assertEqual(orb_S(negative, 2), _value({-2: 1, 0: 1}))

    def test_closed_matches_oracle(self):
        rng = Random(11)
        r_values = (-8, -6, -4, -2, 0, 1, 2, 3, 4, 5, 6, 7)
        orbits = [(r, sample_orbit(self.config, rng, r)) for r in r_values for _ in range(17)]
        self.assertGreaterEqual(len(orbits), 200)
        for r, orbit in orbits:
            for m in range(6):
                self.assertEqual(orb_S(orbit, m, CLOSED), orb_S(orbit, m, ORACLE), f"r={r} m={m}")

    def test_closed_matches_oracle_p5(self):
        config = PrimeConfig(p=5)
        rng = Random(3)
        for r in (-2, 0, 1, 2, 3):
            orbit = sample_orbit(config, rng, r)
            for m in range(4):
                self.assertEqual(orb_S_closed(orbit, m), orb_S_oracle(orbit, m))

    def test_unknown_method(self):
        with self.assertRaises(InvalidInputError):
            orb_S(self.gamma(4, 3), 0, "guess")
        with self.assertRaises(InvalidInputError):
            orb_S(self.gamma(4, 3), -1)

    def test_tilde_vanishes_at_zero_for_odd_r(self):
        for orbit in (self.gamma(4, 3), self.gamma(28, 27)):
            for m in range(5):
                self.assertEqual(orb_S_tilde(orbit, m).value_at_0(), 0)

    def test_tilde_derivatives(self):
        orbit = self.gamma(4, 3)
        value = orb_S_tilde(orbit, 1)
        self.assertEqual(value, _value({-1: 1, 0: -2, 1: 2, 2: -1}))
        self.assertEqual(value.derivative_at_0(), 1)
        self.assertEqual(orb_S_tilde(self.gamma(28, 27), 0).derivative_at_0(), 2)

    def test_orbit_record(self):
        record = orbit_record(self.gamma(4, 3), 1)
        self.assertEqual(record["r"], 1)
        self.assertEqual(record["omega"], -1)
        self.assertEqual(record["value0"], "0/1")
        self.assertEqual(record["dvalue0_logq"], "1/1")


class TestUnitarySide(OrbitCase):
    def test_matched_unitary_split(self):
        rng = Random(5)
        for r, m, expected in ((0, 0, 1), (2, 0, 1), (-2, 1, 1), (-2, 0, 0), (-4, 2, 1), (-4, 1, 0)):
            orbit = sample_orbit(self.config, rng, r)
            g = matched_unitary(orbit)
            self.assertTrue(g.is_split)
            self.assertTrue(g.matches(orbit))
            self.assertEqual(orb_U_support(g, m), expected, f"r={r} m={m}")

    def test_matched_unitary_nonsplit(self):
        g = matched_unitary(self.gamma(4, 3))
        self.assertFalse(g.is_split)
        self.assertEqual(g.gram, (1, 3))
        with self.assertRaises(InvalidInputError):
            orb_U_support(g, 0)

    def test_fundamental_lemma_values(self):
        rng = Random(9)
        for r in (-4, -2, 0, 2):
            orbit = sample_orbit(self.config, rng, r)
            g = matched_unitary(orbit)
            for m in range(4):
                lhs = transfer_factor(orbit) * orb_S_tilde(orbit, m).value_at_0()
                self.assertEqual(lhs, orb_U_support(g, m), f"r={r} m={m}")


class TestHomogeneous(OrbitCase):
    def test_iwasawa_weight(self):
        self.assertEqual(iwasawa_weight(0, 0, self.config), 1)
        self.assertEqual(iwasawa_weight(0, 1, self.config), -4)
        self.assertEqual(iwasawa_weight(1, 1, self.config), -1)
        self.assertEqual(iwasawa_weight(2, 1, self.config), 0)
        self.assertEqual(iwasawa_weight(0, 2, self.config), 13)
        self.assertEqual(iwasawa_weight(0, -1, self.config), 0)

    def test_iwasawa_weight_geometric_sum(self):
        # (-1)^m sum over max(i, 0) <= v(y) <= m of q^(m - v(y))
        for config in (self.config, PrimeConfig(p=5)):
            q = config.p
            for m in range(4):
                for i in range(m + 2):
                    expected = (-1) ** m * sum(q ** (m - vy) for vy in range(i, m + 1))
                    self.assertEqual(iwasawa_weight(i, m, config), expected, f"q={q} i={i} m={m}")

    def test_lift_round_trip(self):
        orbit = self.gamma(4, 3)
        self.assertEqual(symmetric_image(homogeneous_lift(orbit)), orbit)

    def test_homogeneous_matches_inhomogeneous(self):
        orbit = self.gamma(4, 3)
        g = homogeneous_lift(orbit)
        value = homogeneous_orb_oracle(g, 1)
        sign = 1 if value.coefficients()[-2] == 1 else -1
        self.assertEqual(value, _value({-2: 1, 0: -4, 2: 4, 4: -1}).scale(sign))
        for m in range(4):
            homogeneous_orb_oracle(g, m)

    def test_homogeneous_sampled(self):
        rng = Random(2)
        for r in (-2, 0, 1, 3):
            g = homogeneous_lift(sample_orbit(self.config, rng, r))
            for m in range(3):
                homogeneous_orb_oracle(g, m)

    def test_derivative_doubles(self):
        rng = Random(6)
        for r in (1, 3, 5):
            orbit = sample_orbit(self.config, rng, r)
            g = homogeneous_lift(orbit)
            sign = eta_tilde_det(g)
            for m in range(4):
                homogeneous = homogeneous_orb_oracle(g, m)
                inhomogeneous = orb_S_combination(orbit, r_eta_star(m))
                self.assertEqual(homogeneous.value_at_0(), 0)
                self.assertEqual(homogeneous.derivative_at_0(), 2 * sign * inhomogeneous.derivative_at_0())
        # gamma(4, 3), m = 1: Z^-1 - 4 + 4Z - Z^2 has derivative -1, its Z -> Z^2 image -2
        g = homogeneous_lift(self.gamma(4, 3))
        self.assertEqual(abs(homogeneous_orb_oracle(g, 1).derivative_at_0()), 2)


if __name__ == "__main__":
    unittest.main()
