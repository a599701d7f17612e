# -*- coding: utf-8 -*-
import unittest

from hypothesis import given, settings, strategies as st


class RoundingTestCase(unittest.TestCase):

    def test_round_half_up(self):
        from eisjacobi.utils import round_half_up
        self.assertEqual(round_half_up(7, 2), 4)
        self.assertEqual(round_half_up(-7, 2), -3)
        self.assertEqual(round_half_up(10, 3), 3)
        self.assertEqual(round_half_up(-10, 3), -3)

    def test_abs_least_residue(self):
        from eisjacobi.utils import abs_least_residue
        self.assertEqual(abs_least_residue(4, 8), -4)
        self.assertEqual(abs_least_residue(11, 7), -3)
        self.assertEqual(abs_least_residue(-4, 7), 3)

    @settings(max_examples=300, deadline=None)
    @given(st.integers(), st.integers(min_value=1, max_value=2 ** 80))
    def test_abs_least_residue_range(self, value, modulus):
        from eisjacobi.utils import abs_least_residue
        residue = abs_least_residue(value, modulus)
        self.assertEqual((value - residue) % modulus, 0)
        self.assertLessEqual(-modulus, 2 * residue)
        self.assertLess(2 * residue, modulus)


class PrimeHelpersTestCase(unittest.TestCase):

    def test_exact_isqrt(self):
        from eisjacobi.utils import exact_isqrt
        self.assertEqual(exact_isqrt(49), 7)
        self.assertEqual(exact_isqrt(0), 0)
        self.assertIsNone(exact_isqrt(50))
        self.assertIsNone(exact_isqrt(-4))

    def test_is_prime(self):
        from eisjacobi.utils import is_prime
        self.assertTrue(is_prime(125683))
        self.assertFalse(is_prime(1))
        self.assertFalse(is_prime(-7))
        self.assertFalse(is_prime(91))

    def test_primes_in_class(self):
        from eisjacobi.utils import primes_in_class
        self.assertEqual(primes_in_class(40, 3, 1), [7, 13, 19, 31, 37])
        self.assertEqual(primes_in_class(30, 4, 1), [5, 13, 17, 29])
        self.assertEqual(primes_in_class(1, 4, 1), [])
