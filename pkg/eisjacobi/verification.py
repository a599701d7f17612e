# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Benchmark runs over the adversarial families and the verification
suites behind ``eis-jacobi bench`` and ``eis-jacobi verify``.
"""
import logging
import random
from dataclasses import dataclass
from typing import Optional

import gmpy2
from sympy import sieve

from .adversary import even_cubic_bad, even_quartic_bad, family_pair
from .costmodel import CostCounters, fit_exponent
from .division import (
    GUARD_BITS, divmod_even, divmod_newton, divmod_round, remainder_jacobi,
    )
from .errors import StepCapExceeded
from .models import BenchRecord, CubicSymbol, QuarticSymbol
from .residue import (
    euler_cubic_char, euler_quartic_char, primes_over, residue_test_batch,
    )
from .rings import (
    EIS, GAUSS, RING_TYPES, EisensteinInt, GaussianInt, norm, ring_arith,
    unit_normalize_eis, unit_normalize_gauss,
    )
from .symbols import (
    DEFAULT_STEP_CAP, cubic_jacobi, cubic_jacobi_even, quartic_jacobi,
    quartic_jacobi_even,
    )


__all__ = (
    'DEFAULT_SEED', 'DEFAULT_SAMPLES', 'SUITES', 'BENCH_FAMILIES',
    'EVEN_FAMILIES', 'SuiteReport', 'primary_primes', 'residue_system',
    'run_suite', 'run_bench', 'bench_fits',
    )

logger = logging.getLogger('eisjacobi')

DEFAULT_SEED = 20240229
DEFAULT_SAMPLES = 1000
SUITES = ('cubic', 'quartic', 'even', 'residue', 'division')
BENCH_FAMILIES = ('xi3', 'xi4', 'step4', 'even3', 'even4')
EVEN_FAMILIES = ('even3', 'even4')

_SYMBOLS = {EIS: cubic_jacobi, GAUSS: quartic_jacobi}
_SYMBOL_TYPES = {EIS: CubicSymbol, GAUSS: QuarticSymbol}
_EVEN_SYMBOLS = {EIS: cubic_jacobi_even, GAUSS: quartic_jacobi_even}
_CHARACTERS = {EIS: euler_cubic_char, GAUSS: euler_quartic_char}
_NORMALIZE = {EIS: unit_normalize_eis, GAUSS: unit_normalize_gauss}
_RAMIFIED_MODULUS = {EIS: 3, GAUSS: 2}
# (numerator, denominator) of the shrink bounds N(r) <= c N(beta)
_EXACT_SHRINK = {EIS: (3, 4), GAUSS: (1, 2)}
_NEWTON_SHRINK = {EIS: (195, 256), GAUSS: (131, 256)}


@dataclass
class SuiteReport(object):
    suite: str
    max_norm: int
    seed: int
    cases: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self):
        return self.counterexample is None


class _Failure(Exception):
    pass


def _expect(condition, message, *args):
    if not condition:
        raise _Failure(message.format(*args))


# Case generation

def primary_primes(ring, max_norm):
    """Primary primes of norm at most ``max_norm``, split primes first
    appearing with their rational prime, inert primes as ``p``.
    """
    split_class = 1
    inert_modulus = 3 if ring == EIS else 4
    for p in sieve.primerange(2, max_norm + 1):
        p = int(p)
        if p % inert_modulus == split_class:
            for pi in primes_over(p, ring):
                yield pi
        elif p % inert_modulus == inert_modulus - 1 and p * p <= max_norm:
            for pi in primes_over(p, ring):
                yield pi


def residue_system(pi):
    """Nonzero representatives of every class modulo the prime pi."""
    pi_norm = norm(pi)
    cls = type(pi)
    root = int(gmpy2.isqrt(pi_norm))
    if root * root != pi_norm:
        for a in range(1, pi_norm):
            yield cls(a, 0)
        return
    for a in range(root):
        for b in range(root):
            if a or b:
                yield cls(a, b)


def _random_element(rng, ring, bound):
    return RING_TYPES[ring](rng.randint(-bound, bound),
                            rng.randint(-bound, bound))


def _random_unit_free(rng, ring, bound):
    """Random element prime to the ramified prime."""
    modulus = _RAMIFIED_MODULUS[ring]
    while True:
        x = _random_element(rng, ring, bound)
        if (x.a + x.b) % modulus:
            return x


def _random_primary(rng, ring, bound, max_norm):
    while True:
        _, x = _NORMALIZE[ring](_random_unit_free(rng, ring, bound))
        if 1 < norm(x) <= max_norm:
            return x


def _coordinate_bound(max_norm):
    return max(2, int(gmpy2.isqrt(max_norm // 2)))


# Suites

def _definition_suite(ring, report):
    symbol, character = _SYMBOLS[ring], _CHARACTERS[ring]
    for pi in primary_primes(ring, report.max_norm):
        for alpha in residue_system(pi):
            expected = character(alpha, pi)
            got = symbol(alpha, pi)[0]
            _expect(got == expected, "({} / {}): algorithm {} != Euler {}",
                    alpha, pi, got, expected)
            report.cases += 1


def _cubic_supplements(beta):
    """Exponents of w for ``(w / beta)``, ``(1 - w / beta)`` and
    ``(-1 / beta)`` from ``-beta = (3m - 1) + 3n w``.
    """
    c, d = beta.a, beta.b
    if c % 3 == 1:
        c, d = -c, -d
    m, n = (c + 1) // 3, d // 3
    return {
        EisensteinInt(0, 1): (m + n) % 3,
        EisensteinInt(1, -1): 2 * m % 3,
        EisensteinInt(-1, 0): 0,
        }


def _quartic_supplements(beta):
    """Exponents of i for ``(i / beta)``, ``(1 + i / beta)`` and
    ``(-1 / beta)``.
    """
    c, d = beta.a, beta.b
    return {
        GaussianInt(0, 1): -(c - 1) // 2 % 4,
        GaussianInt(1, 1): (c - d - d * d - 1) // 4 % 4,
        GaussianInt(-1, 0): (c - 1) % 4,
        }


_SUPPLEMENTS = {EIS: _cubic_supplements, GAUSS: _quartic_supplements}


def _reciprocity_sign(alpha, beta):
    """Exponent of the root of unity in ``(alpha / beta) / (beta / alpha)``
    for primary alpha and beta.
    """
    if alpha.ring == EIS:
        return 0
    return 2 * ((alpha.a - 1) * (beta.a - 1) // 4 % 2)


def _law_suite(ring, report, rng, samples):
    symbol = _SYMBOLS[ring]
    bound = _coordinate_bound(report.max_norm)
    for _ in range(samples):
        beta = _random_primary(rng, ring, bound, report.max_norm)
        x = _random_element(rng, ring, bound)
        y = _random_element(rng, ring, bound)
        product = symbol(ring_arith(x, y, 'mul'), beta)[0]
        _expect(product == symbol(x, beta)[0] * symbol(y, beta)[0],
                "({} * {} / {}) = {} is not the product of the factors",
                x, y, beta, product)

        alpha = _random_primary(rng, ring, bound, report.max_norm)
        forward = symbol(alpha, beta)[0]
        backward = symbol(beta, alpha)[0]
        twist = _SYMBOL_TYPES[ring](_reciprocity_sign(alpha, beta))
        _expect(forward == backward * twist,
                "({} / {}) = {} against ({} / {}) = {}",
                alpha, beta, forward, beta, alpha, backward)

        for numerator, exponent in _SUPPLEMENTS[ring](beta).items():
            got = symbol(numerator, beta)[0]
            _expect(got.exponent == exponent,
                    "({} / {}) = {}, supplementary law gives exponent {}",
                    numerator, beta, got, exponent)
        report.cases += 1


def _cubic_suite(report, rng, samples):
    _definition_suite(EIS, report)
    _law_suite(EIS, report, rng, samples)


def _quartic_suite(report, rng, samples):
    _definition_suite(GAUSS, report)
    _law_suite(GAUSS, report, rng, samples)


def _even_suite(report, rng, samples):
    bound = _coordinate_bound(report.max_norm)
    for ring in (EIS, GAUSS):
        for _ in range(samples):
            beta = _random_primary(rng, ring, bound, report.max_norm)
            alpha = _random_unit_free(rng, ring, bound)
            expected = _SYMBOLS[ring](alpha, beta)[0]
            got = _EVEN_SYMBOLS[ring](alpha, beta)[0]
            _expect(got == expected,
                    "({} / {}): even quotients {} != rounded quotients {}",
                    alpha, beta, got, expected)
            report.cases += 1
    for k in range(1, 11):
        alpha, beta = even_cubic_bad(k)
        _, trace = cubic_jacobi_even(alpha, beta)
        _expect(trace.iterations == 4 * k + 3,
                "even cubic family k={}: {} iterations, expected {}",
                k, trace.iterations, 4 * k + 3)
        report.cases += 1
    for m in range(2, 21):
        alpha, beta = even_quartic_bad(m)
        _, trace = quartic_jacobi_even(alpha, beta)
        _expect(len(trace.steps) >= m - 2,
                "even quartic family m={}: only {} divisions", m,
                len(trace.steps))
        report.cases += 1


def _residue_suite(report, rng, samples):
    for power, modulus in ((3, 3), (4, 4)):
        for p in sieve.primerange(2, report.max_norm + 1):
            p = int(p)
            if p % modulus != 1:
                continue
            values = list(range(1, p))
            euler = residue_test_batch(p, values, power, 'euler')
            reciprocity = residue_test_batch(p, values, power, 'reciprocity')
            for a, left, right in zip(values, euler, reciprocity):
                _expect(left == right,
                        "{} mod {} (power {}): euler {} != reciprocity {}",
                        a, p, power, left, right)
            report.cases += len(values)


def _check_division(alpha, beta, outcome, mode):
    rebuilt = ring_arith(ring_arith(outcome.q, beta, 'mul'), outcome.r, 'add')
    _expect(rebuilt == alpha, "{}: {} != {} * {} + {}",
            mode, alpha, outcome.q, beta, outcome.r)


def _division_suite(report, rng, samples):
    bound = _coordinate_bound(report.max_norm)
    for ring in (EIS, GAUSS):
        exact_num, exact_den = _EXACT_SHRINK[ring]
        newton_num, newton_den = _NEWTON_SHRINK[ring]
        modulus = _RAMIFIED_MODULUS[ring]
        for _ in range(samples):
            alpha = _random_element(rng, ring, bound)
            beta = _random_element(rng, ring, bound)
            if beta.is_zero:
                continue
            beta_norm = norm(beta)

            rounded = divmod_round(alpha, beta)
            _check_division(alpha, beta, rounded, 'exact')
            _expect(exact_den * norm(rounded.r) <= exact_num * beta_norm,
                    "exact: N({}) too large for {} / {}",
                    rounded.r, alpha, beta)
            jacobi = remainder_jacobi(alpha, beta)
            _expect(jacobi == rounded.r,
                    "jacobi remainder {} != rounded remainder {} for {} / {}",
                    jacobi, rounded.r, alpha, beta)

            newton = divmod_newton(alpha, beta)
            _check_division(alpha, beta, newton, 'newton')
            _expect(newton_den * norm(newton.r) <= newton_num * beta_norm,
                    "newton: N({}) too large for {} / {}",
                    newton.r, alpha, beta)

            if beta_norm > 1:
                even = divmod_even(alpha, beta)
                _check_division(alpha, beta, even, 'even')
                _expect(norm(even.r) < beta_norm,
                        "even: N({}) >= N({})", even.r, beta)
                _expect(even.r.is_zero or
                        (even.q.a + even.q.b) % modulus == 0,
                        "even: quotient {} not divisible for {} / {}",
                        even.q, alpha, beta)
            report.cases += 1


_SUITES = {
    'cubic': _cubic_suite,
    'quartic': _quartic_suite,
    'even': _even_suite,
    'residue': _residue_suite,
    'division': _division_suite,
    }


def run_suite(suite, max_norm, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES):
    """Run one suite; the first failing case ends it and is kept in
    :attr:`SuiteReport.counterexample`.
    """
    try:
        check = _SUITES[suite]
    except KeyError:
        raise ValueError("unknown suite '{}', expected one of {}"
                         .format(suite, ', '.join(SUITES)))
    report = SuiteReport(suite, max_norm, seed)
    rng = random.Random(seed)
    try:
        check(report, rng, samples)
    except _Failure as failure:
        report.counterexample = str(failure)
    logger.info("suite {}: {} cases, {}".format(
        suite, report.cases, 'passed' if report.passed else 'FAILED'))
    return report


# Benchmarks

def _bench_one(family, n, backend, norm_formula, step_cap, guard_bits):
    alpha, beta = family_pair(family, n)
    counters = CostCounters()
    cap_exceeded = False
    try:
        if family in EVEN_FAMILIES:
            if backend != 'exact':
                raise ValueError(
                    "family {} runs with the exact backend only"
                    .format(family))
            _, trace = _EVEN_SYMBOLS[beta.ring](
                alpha, beta, step_cap=step_cap, counters=counters)
        else:
            _, trace = _SYMBOLS[beta.ring](
                alpha, beta, backend=backend, counters=counters,
                guard_bits=guard_bits, norm_formula=norm_formula)
    except StepCapExceeded as exc:
        trace = exc.trace
        cap_exceeded = True
    return BenchRecord(
        family=family, n=n, input_bits=max(alpha.bits, beta.bits),
        backend=backend, div_steps=counters.div_steps,
        ramified_removals=counters.ramified_removals,
        mul_cost=counters.mul_cost,
        remainder_volume=counters.remainder_volume,
        add_cost=counters.add_cost, model_cost=counters.model_cost,
        iterations=trace.iterations, cap_exceeded=cap_exceeded)


def run_bench(family, sizes, backends=('exact',), norm_formula='standard',
              step_cap=DEFAULT_STEP_CAP, guard_bits=GUARD_BITS):
    """One :class:`~eisjacobi.models.BenchRecord` per (size, backend),
    ordered by ``(family, n, backend)``.
    """
    if family not in BENCH_FAMILIES:
        raise ValueError("unknown family '{}', expected one of {}"
                         .format(family, ', '.join(BENCH_FAMILIES)))
    records = []
    for n in sizes:
        for backend in backends:
            record = _bench_one(family, n, backend, norm_formula, step_cap,
                                guard_bits)
            logger.info("bench {} n={} {}: {} steps, model cost {}".format(
                family, n, backend, record.div_steps, record.model_cost))
            records.append(record)
    return sorted(records, key=lambda record: record.sort_key)


def bench_fits(records):
    """Fitted exponents of model cost and remainder volume against n,
    per backend, as ``(name, exponent)`` pairs.
    """
    fits = []
    backends = sorted(set(record.backend for record in records))
    for backend in backends:
        rows = [record for record in records
                if record.backend == backend and not record.cap_exceeded]
        for column in ('model_cost', 'remainder_volume'):
            points = [(row.n, getattr(row, column)) for row in rows]
            fits.append(('{}:{}'.format(backend, column),
                         fit_exponent(points)))
    return fits
