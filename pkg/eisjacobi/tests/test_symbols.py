# -*- coding: utf-8 -*-
import dataclasses
import math
import unittest

from hypothesis import assume, given, settings, strategies as st

from eisjacobi.testing import (
    EIS, GAUSS, eis, gauss, ring_elements, unit_free_elements,
    )


def primary_elements(ring, bits):
    from eisjacobi.rings import unit_normalize_eis, unit_normalize_gauss
    normalize = unit_normalize_eis if ring == EIS else unit_normalize_gauss
    return unit_free_elements(ring, bits).map(lambda x: normalize(x)[1])


class StepExponentTestCase(unittest.TestCase):

    def test_cubic(self):
        from eisjacobi.symbols import cubic_step_exponent
        self.assertEqual(cubic_step_exponent(1, 0, 4, 3), 1)
        self.assertEqual(cubic_step_exponent(0, 1, 4, 3), 1)
        self.assertEqual(cubic_step_exponent(0, 0, 4, 3), 0)
        # c and d only matter mod 9
        self.assertEqual(cubic_step_exponent(2, 1, 4 + 9 * 7, 3 - 9 * 5),
                         cubic_step_exponent(2, 1, 4, 3))

    def test_cubic_requires_primary(self):
        from eisjacobi.errors import DomainError
        from eisjacobi.symbols import cubic_step_exponent
        with self.assertRaises(DomainError):
            cubic_step_exponent(1, 0, 3, 0)
        with self.assertRaises(DomainError):
            cubic_step_exponent(1, 0, 2, 1)

    def test_quartic_requires_primary(self):
        from eisjacobi.errors import DomainError
        from eisjacobi.symbols import quartic_step_exponent
        self.assertIn(quartic_step_exponent(1, 1, -1, 2, 1), range(4))
        with self.assertRaises(DomainError):
            quartic_step_exponent(1, 0, 2, 1, 1)


class CubicJacobiTestCase(unittest.TestCase):

    @property
    def target(self):
        from eisjacobi.symbols import cubic_jacobi
        return cubic_jacobi

    def test_small(self):
        symbol, trace = self.target(2, eis(-2, -3))
        self.assertEqual(str(symbol), 'w^1')
        self.assertEqual(trace.quotients, [eis(0, 1)])
        self.assertEqual((trace.steps[0].m, trace.steps[0].n), (0, 2))
        self.assertEqual(trace.iterations, 2)
        self.assertEqual(trace.counters.div_steps, 1)

    def test_composite_lower_argument(self):
        symbol, _ = self.target(2, eis(-5, 3))
        self.assertEqual(str(symbol), 'w^2')

    def test_common_factor(self):
        symbol, trace = self.target(5, 5)
        self.assertTrue(symbol.is_zero)
        self.assertEqual(trace.gcd, eis(5))

    def test_base_cases(self):
        for beta in (eis(1), eis(-1)):
            symbol, trace = self.target(eis(17, 4), beta)
            self.assertEqual(symbol.exponent, 0)
            self.assertEqual(trace.steps, [])
        symbol, trace = self.target(1, eis(2, 3))
        self.assertEqual(symbol.exponent, 0)
        self.assertEqual(trace.steps, [])

    def test_non_primary(self):
        from eisjacobi.errors import ContractError
        with self.assertRaises(ContractError):
            self.target(2, eis(3, 1))
        with self.assertRaises(ValueError):
            self.target(gauss(2), eis(2, 3))

    def test_step_four_stress(self):
        from eisjacobi.adversary import step4_stress
        for m in (1, 2, 5, 16, 64):
            _, trace = self.target(*step4_stress(m))
            self.assertEqual(trace.steps[0].q, eis(1))
            self.assertEqual(trace.steps[0].m, m)

    @settings(max_examples=150, deadline=None)
    @given(ring_elements(EIS, 12), primary_elements(EIS, 9))
    def test_matches_oracle(self, alpha, beta):
        from eisjacobi.residue import jacobi_oracle
        self.assertEqual(self.target(alpha, beta)[0],
                         jacobi_oracle(alpha, beta))

    @settings(max_examples=200, deadline=None)
    @given(primary_elements(EIS, 200), primary_elements(EIS, 200))
    def test_reciprocity(self, alpha, beta):
        self.assertEqual(self.target(alpha, beta)[0],
                         self.target(beta, alpha)[0])

    @settings(max_examples=100, deadline=None)
    @given(ring_elements(EIS, 100), ring_elements(EIS, 100),
           primary_elements(EIS, 100))
    def test_multiplicative(self, x, y, beta):
        from eisjacobi.rings import ring_arith
        product = self.target(ring_arith(x, y, 'mul'), beta)[0]
        self.assertEqual(product,
                         self.target(x, beta)[0] * self.target(y, beta)[0])

    @settings(max_examples=100, deadline=None)
    @given(ring_elements(EIS, 300), primary_elements(EIS, 300))
    def test_newton_backend_agrees(self, alpha, beta):
        self.assertEqual(self.target(alpha, beta, backend='newton')[0],
                         self.target(alpha, beta)[0])

    @settings(max_examples=100, deadline=None)
    @given(ring_elements(EIS, 200), primary_elements(EIS, 200))
    def test_depth_bound(self, alpha, beta):
        from eisjacobi.rings import norm
        _, trace = self.target(alpha, beta)
        bound = math.ceil(math.log(max(norm(beta), 2)) / math.log(4 / 3))
        self.assertLessEqual(len(trace.steps), bound + 2)


class QuarticJacobiTestCase(unittest.TestCase):

    @property
    def target(self):
        from eisjacobi.symbols import quartic_jacobi
        return quartic_jacobi

    def test_small(self):
        symbol, trace = self.target(2, gauss(-1, 2))
        self.assertEqual(str(symbol), 'i^3')
        self.assertEqual(trace.quotients, [gauss(0, -1)])
        self.assertEqual(trace.steps[0].n, 3)

    def test_non_primary(self):
        from eisjacobi.errors import ContractError
        with self.assertRaises(ContractError):
            self.target(2, gauss(2, 1))

    @settings(max_examples=150, deadline=None)
    @given(ring_elements(GAUSS, 12), primary_elements(GAUSS, 9))
    def test_matches_oracle(self, alpha, beta):
        from eisjacobi.residue import jacobi_oracle
        self.assertEqual(self.target(alpha, beta)[0],
                         jacobi_oracle(alpha, beta))

    @settings(max_examples=200, deadline=None)
    @given(primary_elements(GAUSS, 200), primary_elements(GAUSS, 200))
    def test_reciprocity(self, alpha, beta):
        from eisjacobi.models import QuarticSymbol
        from eisjacobi.rings import norm
        forward = self.target(alpha, beta)[0]
        backward = self.target(beta, alpha)[0]
        sign = ((norm(alpha) - 1) // 4) * ((norm(beta) - 1) // 4) % 2
        self.assertEqual(forward, backward * QuarticSymbol(2 * sign))

    @settings(max_examples=100, deadline=None)
    @given(ring_elements(GAUSS, 300), primary_elements(GAUSS, 300))
    def test_newton_backend_agrees(self, alpha, beta):
        self.assertEqual(self.target(alpha, beta, backend='newton')[0],
                         self.target(alpha, beta)[0])

    @settings(max_examples=100, deadline=None)
    @given(ring_elements(GAUSS, 200), primary_elements(GAUSS, 200))
    def test_depth_bound(self, alpha, beta):
        from eisjacobi.rings import norm
        _, trace = self.target(alpha, beta)
        bound = math.ceil(math.log2(max(norm(beta), 2)))
        self.assertLessEqual(len(trace.steps), bound + 2)


class SupplementTestCase(unittest.TestCase):

    def test_small(self):
        from eisjacobi.symbols import cubic_jacobi, quartic_jacobi
        # w = w^((4 - 1) / 3) mod 2 and 1 + i = -1 mod -1 + 2i
        self.assertEqual(str(cubic_jacobi(eis(0, 1), eis(2))[0]), 'w^1')
        self.assertEqual(str(quartic_jacobi(gauss(1, 1), gauss(-1, 2))[0]),
                         'i^2')

    @settings(max_examples=200, deadline=None)
    @given(primary_elements(EIS, 100))
    def test_cubic(self, beta):
        from eisjacobi.symbols import cubic_jacobi
        # written with -beta = (3m - 1) + 3n w
        c, d = beta.a, beta.b
        if c % 3 == 1:
            c, d = -c, -d
        m, n = (c + 1) // 3, d // 3
        self.assertEqual(cubic_jacobi(eis(0, 1), beta)[0].exponent,
                         (m + n) % 3)
        self.assertEqual(cubic_jacobi(eis(1, -1), beta)[0].exponent,
                         2 * m % 3)
        self.assertEqual(cubic_jacobi(-1, beta)[0].exponent, 0)

    @settings(max_examples=200, deadline=None)
    @given(primary_elements(GAUSS, 100))
    def test_quartic(self, beta):
        from eisjacobi.symbols import quartic_jacobi
        c, d = beta.a, beta.b
        self.assertEqual(quartic_jacobi(gauss(0, 1), beta)[0].exponent,
                         -(c - 1) // 2 % 4)
        self.assertEqual(quartic_jacobi(gauss(1, 1), beta)[0].exponent,
                         (c - d - d * d - 1) // 4 % 4)
        self.assertEqual(quartic_jacobi(-1, beta)[0].exponent,
                         (c - 1) % 4)


class EvenQuotientTestCase(unittest.TestCase):

    cycle = [eis(1, 2), eis(1, -1), eis(-1, 1), eis(-1, 1)]

    def test_cubic_bad_family_first_member(self):
        from eisjacobi.adversary import even_cubic_bad
        from eisjacobi.symbols import cubic_jacobi, cubic_jacobi_even
        alpha, beta = even_cubic_bad(1)
        symbol, trace = cubic_jacobi_even(alpha, beta)
        self.assertEqual(trace.quotients, [eis(0)] + self.cycle + [eis(1, 2)])
        self.assertEqual(trace.iterations, 7)
        self.assertEqual(symbol, cubic_jacobi(alpha, beta)[0])

    def test_cubic_bad_family(self):
        from eisjacobi.adversary import even_cubic_bad
        from eisjacobi.symbols import cubic_jacobi, cubic_jacobi_even
        for k in range(2, 21):
            alpha, beta = even_cubic_bad(k)
            symbol, trace = cubic_jacobi_even(alpha, beta)
            self.assertEqual(trace.iterations, 4 * k + 3)
            self.assertEqual(trace.counters.div_steps, 4 * k + 2)
            self.assertEqual(trace.quotients[0], eis(0))
            self.assertEqual(trace.quotients[1:],
                             (self.cycle * (k + 1))[:4 * k + 1])
            self.assertEqual(symbol, cubic_jacobi(alpha, beta)[0])
        alpha, beta = even_cubic_bad(500)
        symbol, trace = cubic_jacobi_even(alpha, beta)
        self.assertEqual(trace.iterations, 4 * 500 + 3)
        self.assertEqual(symbol, cubic_jacobi(alpha, beta)[0])

    def test_quartic_bad_family(self):
        from eisjacobi.adversary import even_quartic_bad
        from eisjacobi.symbols import quartic_jacobi_even
        _, trace = quartic_jacobi_even(*even_quartic_bad(5))
        self.assertEqual(trace.quotients, [gauss(2)] * 4)
        for m in (10, 100, 1000):
            _, trace = quartic_jacobi_even(*even_quartic_bad(m))
            self.assertGreaterEqual(len(trace.steps), m - 2)

    def test_step_cap(self):
        from eisjacobi.adversary import even_cubic_bad
        from eisjacobi.errors import StepCapExceeded
        from eisjacobi.symbols import cubic_jacobi_even
        alpha, beta = even_cubic_bad(3)
        with self.assertRaises(StepCapExceeded) as caught:
            cubic_jacobi_even(alpha, beta, step_cap=5)
        self.assertEqual(caught.exception.cap, 5)
        self.assertEqual(len(caught.exception.trace.steps), 5)
        _, trace = cubic_jacobi_even(alpha, beta, step_cap=14)
        self.assertEqual(len(trace.steps), 14)

    def test_ramified_alpha_rejected(self):
        from eisjacobi.errors import ContractError
        from eisjacobi.symbols import cubic_jacobi_even, quartic_jacobi_even
        with self.assertRaises(ContractError):
            cubic_jacobi_even(eis(3), eis(2, 3))
        with self.assertRaises(ContractError):
            quartic_jacobi_even(gauss(1, 1), gauss(-1, 2))

    @settings(max_examples=150, deadline=None)
    @given(st.sampled_from((EIS, GAUSS)), st.data())
    def test_agrees_with_rounded_quotients(self, ring, data):
        from eisjacobi.symbols import jacobi_symbol
        alpha = data.draw(unit_free_elements(ring, 20))
        beta = data.draw(primary_elements(ring, 20))
        self.assertEqual(jacobi_symbol(alpha, beta, alg='even')[0],
                         jacobi_symbol(alpha, beta)[0])


class WrapperTestCase(unittest.TestCase):

    def test_associate_normalized(self):
        from eisjacobi.symbols import jacobi_symbol
        symbol, _ = jacobi_symbol(2, eis(3, 1))
        self.assertEqual(str(symbol), 'w^1')
        symbol, _ = jacobi_symbol(2, gauss(-2, -1))
        self.assertEqual(str(symbol), 'i^3')

    def test_rejections(self):
        from eisjacobi.errors import ContractError
        from eisjacobi.symbols import jacobi_symbol
        with self.assertRaises(ContractError):
            jacobi_symbol(2, eis(3))
        with self.assertRaises(ContractError):
            jacobi_symbol(2, 0)
        with self.assertRaises(ValueError):
            jacobi_symbol(2, eis(2, 3), alg='even', backend='newton')
        with self.assertRaises(ValueError):
            jacobi_symbol(2, eis(2, 3), alg='binary')


class GcdAndReplayTestCase(unittest.TestCase):

    def test_gcd(self):
        from eisjacobi.symbols import ring_gcd
        self.assertEqual(ring_gcd(eis(21), eis(14)), eis(-7))
        self.assertEqual(ring_gcd(eis(5), eis(0)), eis(5))

    @settings(max_examples=100, deadline=None)
    @given(ring_elements(EIS, 40), ring_elements(EIS, 40),
           ring_elements(EIS, 40, nonzero=True))
    def test_gcd_divides(self, x, y, common):
        from eisjacobi.division import remainder_jacobi
        from eisjacobi.rings import ring_arith
        from eisjacobi.symbols import ring_gcd
        alpha = ring_arith(x, common, 'mul')
        beta = ring_arith(y, common, 'mul')
        assume(not (alpha.is_zero and beta.is_zero))
        g = ring_gcd(alpha, beta)
        self.assertTrue(remainder_jacobi(alpha, g).is_zero)
        self.assertTrue(remainder_jacobi(beta, g).is_zero)
        self.assertTrue(remainder_jacobi(g, common).is_zero)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from((EIS, GAUSS)), st.data())
    def test_replay(self, ring, data):
        from eisjacobi.symbols import jacobi_symbol, replay_trace
        alpha = data.draw(ring_elements(ring, 100))
        beta = data.draw(primary_elements(ring, 100))
        _, trace = jacobi_symbol(alpha, beta)
        pairs = replay_trace(trace, alpha, beta)
        self.assertEqual(pairs[0], (alpha, beta))
        self.assertIn(len(pairs), (len(trace.steps), len(trace.steps) + 1))

    def test_replay_detects_tampering(self):
        from eisjacobi.errors import IntegrityError
        from eisjacobi.symbols import cubic_jacobi, replay_trace
        alpha, beta = eis(1000, 1), eis(2, 3 * 101)
        _, trace = cubic_jacobi(alpha, beta)
        step = trace.steps[0]
        trace.steps[0] = dataclasses.replace(step, n=(step.n + 1) % 3)
        with self.assertRaises(IntegrityError):
            replay_trace(trace, alpha, beta)
