# -*- coding: utf-8 -*-
import unittest

from eisjacobi.testing import eis, gauss


class XiSequenceTestCase(unittest.TestCase):

    def test_cubic_terms(self):
        from eisjacobi.adversary import xi_cubic, xi_cubic_sequence
        self.assertEqual(xi_cubic_sequence(3),
                         [eis(-1), eis(2), eis(-1, 6), eis(-16, -21)])
        self.assertEqual(xi_cubic_sequence(0), [eis(-1)])
        self.assertEqual(xi_cubic(3), eis(-16, -21))

    def test_quartic_terms(self):
        from eisjacobi.adversary import xi_quartic, xi_quartic_sequence
        self.assertEqual(xi_quartic_sequence(3),
                         [gauss(1), gauss(5), gauss(11, 10), gauss(7, 42)])
        self.assertEqual(xi_quartic(2), gauss(11, 10))

    def test_cubic_terms_are_primary(self):
        from eisjacobi.adversary import xi_cubic_sequence
        from eisjacobi.rings import is_primary
        for term in xi_cubic_sequence(60):
            self.assertTrue(is_primary(term), term)

    def test_negative_index(self):
        from eisjacobi.adversary import xi_cubic_sequence
        from eisjacobi.errors import DomainError
        with self.assertRaises(DomainError):
            xi_cubic_sequence(-1)

    def test_cubic_lockin(self):
        from eisjacobi.adversary import xi_cubic_sequence
        from eisjacobi.division import divmod_round
        terms = xi_cubic_sequence(500)
        for n in range(3, 501):
            outcome = divmod_round(terms[n], terms[n - 1])
            self.assertEqual(outcome.q, eis(0, 3), n)
            self.assertEqual(outcome.r, terms[n - 2], n)

    def test_quartic_lockin(self):
        from eisjacobi.adversary import quartic_lockin_start
        from eisjacobi.errors import DomainError
        self.assertLessEqual(quartic_lockin_start(500), 5)
        with self.assertRaises(DomainError):
            quartic_lockin_start(1)

    def test_recurrence_specs(self):
        from eisjacobi.adversary import XI_CUBIC, XI_QUARTIC
        self.assertEqual(XI_CUBIC.coefficient, eis(0, 3))
        self.assertEqual(XI_QUARTIC.coefficient, gauss(2, 2))
        self.assertEqual(XI_CUBIC.seeds, (eis(-1), eis(2)))


class GrowthRateTestCase(unittest.TestCase):

    def test_values(self):
        from eisjacobi.adversary import growth_rate
        self.assertAlmostEqual(float(growth_rate(10)), 2.06866, delta=1e-4)
        self.assertAlmostEqual(float(growth_rate(200)), 2.1144, delta=5e-3)

    def test_approaches_dominant_root(self):
        import math
        from eisjacobi.adversary import XI_CUBIC, growth_rate
        limit = 2 * math.log(float(XI_CUBIC.dominant_root_modulus))
        self.assertLess(abs(float(growth_rate(400)) - limit),
                        abs(float(growth_rate(20)) - limit))

    def test_log_norm(self):
        from eisjacobi.adversary import log_norm
        self.assertAlmostEqual(float(log_norm(eis(2, 3))), 1.945910,
                               places=5)

    def test_short_sequences(self):
        from eisjacobi.adversary import growth_rate
        from eisjacobi.errors import DomainError
        with self.assertRaises(DomainError):
            growth_rate(9)


class FamilyTestCase(unittest.TestCase):

    @property
    def target(self):
        from eisjacobi.adversary import family_pair
        return family_pair

    def test_step_four_stress(self):
        from eisjacobi.adversary import step4_stress
        self.assertEqual(step4_stress(1), (eis(5, -1), eis(4)))
        self.assertEqual(step4_stress(2), (eis(10, -3), eis(10)))

    def test_even_families(self):
        from eisjacobi.adversary import even_cubic_bad, even_quartic_bad
        self.assertEqual(even_cubic_bad(1), (eis(0, 5), eis(1, 6)))
        self.assertEqual(even_quartic_bad(5), (gauss(21), gauss(17)))

    def test_family_pairs(self):
        self.assertEqual(self.target('xi3', 3), (eis(-16, -21), eis(-1, 6)))
        self.assertEqual(self.target('xi4', 1), (gauss(5), gauss(1)))
        self.assertEqual(self.target('step4', 1), (eis(5, -1), eis(4)))
        self.assertEqual(self.target('even3', 1), (eis(0, 5), eis(1, 6)))
        self.assertEqual(self.target('even4', 5), (gauss(21), gauss(17)))

    def test_parameter_ranges(self):
        from eisjacobi.errors import DomainError
        for family, n in (('xi3', 0), ('xi4', 0), ('step4', 0),
                          ('even3', 0), ('even4', 1)):
            with self.assertRaises(DomainError):
                self.target(family, n)

    def test_unknown_family(self):
        with self.assertRaises(ValueError):
            self.target('xi5', 3)
