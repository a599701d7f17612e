# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
from contextlib import contextmanager
from fractions import Fraction
from io import StringIO
import sys
import unittest

from hypothesis import strategies as st

from .rings import EIS, GAUSS, EisensteinInt, GaussianInt, norm, ring_arith


def eis(a, b=0):
    return EisensteinInt(a, b)


def gauss(a, b=0):
    return GaussianInt(a, b)


def coordinates(bits=64):
    bound = 2 ** bits
    return st.integers(min_value=-bound, max_value=bound)


def ring_elements(ring=EIS, bits=64, nonzero=False):
    """Hypothesis strategy for elements of Z[w] or Z[i]."""
    cls = EisensteinInt if ring == EIS else GaussianInt
    strategy = st.builds(cls, coordinates(bits), coordinates(bits))
    if nonzero:
        strategy = strategy.filter(lambda x: not x.is_zero)
    return strategy


def unit_free_elements(ring=EIS, bits=64):
    """Elements prime to the ramified prime (1 - w or 1 + i)."""
    modulus = 3 if ring == EIS else 2
    return ring_elements(ring, bits).filter(
        lambda x: (x.a + x.b) % modulus != 0)


class RingTestCase(unittest.TestCase):

    eis = staticmethod(eis)
    gauss = staticmethod(gauss)

    def assertDivision(self, alpha, beta, outcome):
        """``alpha == q * beta + r``."""
        rebuilt = ring_arith(ring_arith(outcome.q, beta, 'mul'),
                             outcome.r, 'add')
        self.assertEqual(rebuilt, alpha,
                         "{} != ({}) * ({}) + ({})".format(
                             alpha, outcome.q, beta, outcome.r))

    def assertShrinks(self, outcome, bound):
        """``N(r) <= bound * N(beta)`` for a Fraction ``bound``."""
        bound = Fraction(bound)
        self.assertLessEqual(
            bound.denominator * norm(outcome.r),
            bound.numerator * norm(outcome.divisor),
            "N({}) > {} N({})".format(outcome.r, bound, outcome.divisor))


@contextmanager
def captured_output():
    new_out, new_err = StringIO(), StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    try:
        sys.stdout, sys.stderr = new_out, new_err
        yield sys.stdout, sys.stderr
    finally:
        sys.stdout, sys.stderr = old_out, old_err


__all__ = (
    'EIS', 'GAUSS', 'eis', 'gauss', 'coordinates', 'ring_elements',
    'unit_free_elements', 'RingTestCase', 'captured_output',
    )
