# -*- coding: utf-8 -*-
import unittest
from fractions import Fraction

from eisjacobi.testing import eis, gauss


class PowerSymbolTestCase(unittest.TestCase):

    def test_cubic(self):
        from eisjacobi.models import CubicSymbol
        self.assertEqual(CubicSymbol(4), CubicSymbol(1))
        self.assertEqual(str(CubicSymbol(-1)), 'w^2')
        self.assertEqual(CubicSymbol(2).value, eis(-1, -1))
        self.assertEqual(CubicSymbol(1) * CubicSymbol(2), CubicSymbol(0))
        self.assertEqual(CubicSymbol(2) ** 2, CubicSymbol(1))

    def test_quartic(self):
        from eisjacobi.models import QuarticSymbol
        self.assertEqual(str(QuarticSymbol(7)), 'i^3')
        self.assertEqual(QuarticSymbol(3).value, gauss(0, -1))
        self.assertEqual(QuarticSymbol(3) * QuarticSymbol(3),
                         QuarticSymbol(2))

    def test_zero(self):
        from eisjacobi.models import CubicSymbol, QuarticSymbol
        zero = CubicSymbol.zero()
        self.assertTrue(zero.is_zero)
        self.assertEqual(str(zero), '0')
        self.assertEqual(zero * CubicSymbol(1), zero)
        self.assertEqual(zero ** 0, CubicSymbol(0))
        self.assertEqual(QuarticSymbol.zero().value, gauss(0))
        self.assertNotEqual(zero, CubicSymbol(0))

    def test_mixed_orders(self):
        from eisjacobi.models import CubicSymbol, QuarticSymbol
        with self.assertRaises(TypeError):
            CubicSymbol(1) * QuarticSymbol(1)


class TraceTestCase(unittest.TestCase):

    def test_step_record_text(self):
        from eisjacobi.models import StepRecord
        step = StepRecord(eis(0, 3), 1, 2, 5, 4, 2)
        self.assertEqual(str(step), 'q=3w m=1 n=2 bits=5/4/2')

    def test_run_trace(self):
        from eisjacobi.models import RunTrace, StepRecord
        trace = RunTrace()
        self.assertEqual(len(trace), 0)
        trace.steps.append(StepRecord(eis(1), 0, 0, 3, 3, 1))
        trace.steps.append(StepRecord(eis(0, 3), 0, 1, 3, 2, 2))
        self.assertEqual(len(trace), 2)
        self.assertEqual(trace.quotients, [eis(1), eis(0, 3)])
        self.assertEqual(trace.counters.div_steps, 0)


class DivisionOutcomeTestCase(unittest.TestCase):

    def test_shrink(self):
        from eisjacobi.models import DivisionOutcome
        outcome = DivisionOutcome(eis(3), eis(1), eis(2, 1))
        self.assertEqual(outcome.shrink, Fraction(1, 3))


class DyadicComplexTestCase(unittest.TestCase):

    @property
    def target(self):
        from eisjacobi.models import DyadicComplex
        return DyadicComplex

    def test_coordinates_and_norm(self):
        x = self.target(3, -2, 2)
        self.assertEqual(x.coordinates, (Fraction(3, 4), Fraction(-1, 2)))
        # 9/16 + 6/16 + 4/16
        self.assertEqual(x.norm(), Fraction(19, 16))
        self.assertEqual(self.target(3, -2, 2, 'gauss').norm(),
                         Fraction(13, 16))
        self.assertEqual(x.bits, 2)

    def test_negative_exponent(self):
        with self.assertRaises(ValueError):
            self.target(1, 0, -1)


class SolutionTestCase(unittest.TestCase):

    def test_norm_equation_solution(self):
        from eisjacobi.errors import IntegrityError
        from eisjacobi.models import NormEquationSolution
        solution = NormEquationSolution(7, 2, 1, 3, 2)
        self.assertIsNone(solution.pi)
        with self.assertRaises(IntegrityError):
            NormEquationSolution(7, 2, 1, 2, 3)
        with self.assertRaises(IntegrityError):
            NormEquationSolution(13, 2, 1, 3, 2)

    def test_two_squares(self):
        from eisjacobi.errors import IntegrityError
        from eisjacobi.models import TwoSquares
        self.assertEqual(TwoSquares(13, 2, 3).y, 3)
        with self.assertRaises(IntegrityError):
            TwoSquares(13, 1, 3)


class BenchRecordTestCase(unittest.TestCase):

    def test_flat_record(self):
        from eisjacobi.models import BENCH_FIELDS, BenchRecord
        record = BenchRecord('xi3', 8, 12, 'exact', 8, 0, 400, 96)
        data = record.as_dict()
        self.assertEqual(tuple(data), BENCH_FIELDS)
        self.assertEqual(BENCH_FIELDS[:8], (
            'family', 'n', 'input_bits', 'backend', 'div_steps',
            'ramified_removals', 'mul_cost', 'remainder_volume'))
        self.assertFalse(data['cap_exceeded'])
        self.assertEqual(record.sort_key, ('xi3', 8, 'exact'))


class RecurrenceSpecTestCase(unittest.TestCase):

    def test_unknown_ring(self):
        from eisjacobi.models import RecurrenceSpec
        with self.assertRaises(ValueError):
            RecurrenceSpec('hurwitz', eis(0, 3), (eis(-1), eis(2)),
                           '0', '0', '0')
