# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Cubic and quartic Jacobi symbols by Euclidean descent.

Each step divides, strips the ramified prime from the remainder, rotates
it to its primary associate and swaps, collecting the supplementary
laws as a root-of-unity exponent along the way::

    (alpha / beta) = (ramified / beta)**m * (unit / beta)**n * (beta / gamma)

Every entry point returns ``(symbol, trace)``.
"""
import logging
from collections import namedtuple

from .costmodel import CostCounters
from .division import GUARD_BITS, divider, divmod_even, divmod_round
from .errors import ContractError, DomainError, IntegrityError, \
    StepCapExceeded
from .models import CubicSymbol, QuarticSymbol, RunTrace, StepRecord
from .rings import (
    EIS, GAUSS, RING_TYPES, bitlen, is_primary, is_unit, norm, ring_arith,
    remove_even, remove_ramified, unit_index, unit_normalize_eis,
    unit_normalize_gauss,
    )


__all__ = (
    'DEFAULT_STEP_CAP', 'ALGORITHMS',
    'cubic_step_exponent', 'quartic_step_exponent',
    'cubic_jacobi', 'quartic_jacobi',
    'cubic_jacobi_even', 'quartic_jacobi_even',
    'jacobi_symbol', 'ring_gcd', 'replay_trace',
    )

logger = logging.getLogger('eisjacobi')

DEFAULT_STEP_CAP = 2 ** 20
ALGORITHMS = ('wh', 'even')


def cubic_step_exponent(m, n, c, d):
    """Exponent of w contributed by ``(1 - w)**m * w**n`` over the primary
    ``c + d w``: ``-m (c^2 - 1)/3 + n (c^2 - c d - 1)/3 mod 3``.
    """
    if c % 3 == 0 or d % 3:
        raise DomainError(
            "{} + {}w is not primary: need d = 0 and c != 0 mod 3"
            .format(c, d))
    c, d = c % 9, d % 9
    ramified = (c * c - 1) // 3
    rotation = (c * c - c * d - 1) // 3
    return (-m * ramified + n * rotation) % 3


def quartic_step_exponent(m, n, c, d, e):
    """Exponent of i contributed by ``(1 + i)**m * i**n`` over the primary
    ``c + d i`` together with the reciprocity sign for a new divisor
    with real part ``e``.
    """
    if d % 2 or (c + d) % 4 != 1:
        raise DomainError(
            "{} + {}i is not primary: need d even and c + d = 1 mod 4"
            .format(c, d))
    c, d, e = c % 16, d % 16, e % 16
    ramified = (c - d - d * d - 1) // 4
    rotation = (c - 1) // 2
    sign = ((e - 1) * (c - 1) // 4) % 2
    return (m * ramified - n * rotation + 2 * sign) % 4


def _cubic_unit_exponent(index, beta):
    c, d = beta.a % 9, beta.b % 9
    return (index % 3) * ((c * c - c * d - 1) // 3)


def _quartic_unit_exponent(index, beta):
    return -index * (((beta.a % 16) - 1) // 2)


_Rules = namedtuple('_Rules', (
    'ring', 'symbol', 'strip', 'normalize', 'finished', 'step_exponent',
    'unit_exponent', 'requirement',
    ))

_CUBIC = _Rules(
    ring=EIS,
    symbol=CubicSymbol,
    strip=remove_ramified,
    normalize=unit_normalize_eis,
    finished=lambda beta: beta.b == 0 and beta.a in (1, -1),
    step_exponent=lambda m, n, beta, gamma: cubic_step_exponent(
        m, n, beta.a, beta.b),
    unit_exponent=_cubic_unit_exponent,
    requirement='b = 0 mod 3 and a != 0 mod 3',
    )
_QUARTIC = _Rules(
    ring=GAUSS,
    symbol=QuarticSymbol,
    strip=remove_even,
    normalize=unit_normalize_gauss,
    finished=lambda beta: beta.b == 0 and beta.a == 1,
    step_exponent=lambda m, n, beta, gamma: quartic_step_exponent(
        m, n, beta.a, beta.b, gamma.a),
    unit_exponent=_quartic_unit_exponent,
    requirement='b even and a + b = 1 mod 4',
    )
_RULES = {EIS: _CUBIC, GAUSS: _QUARTIC}


def _operand(value, ring, name):
    if isinstance(value, int):
        return RING_TYPES[ring](value, 0)
    if getattr(value, 'ring', None) != ring:
        raise ValueError("{} must be a {} element, got {!r}"
                         .format(name, ring, value))
    return value


def _require_primary(beta, rules):
    if not is_primary(beta):
        raise ContractError("beta = {} is not primary: need {}"
                            .format(beta, rules.requirement))


def _descend(alpha, beta, rules, divide, counters, step_cap=None,
             even=False):
    if counters is None:
        counters = CostCounters()
    trace = RunTrace(counters=counters)
    exponent = 0
    while True:
        trace.iterations += 1
        if rules.finished(beta):
            trace.gcd = beta
            break
        if is_unit(alpha):
            exponent += rules.unit_exponent(unit_index(alpha), beta)
            trace.gcd = alpha
            break
        if step_cap is not None and len(trace.steps) >= step_cap:
            logger.warning("step cap {} reached at ({}, {})"
                           .format(step_cap, alpha, beta))
            raise StepCapExceeded(step_cap, trace)

        outcome = divide(alpha, beta, counters)
        counters.div_steps += 1
        counters.remainder_volume += bitlen(norm(beta))
        gamma = outcome.r
        if gamma.is_zero:
            trace.steps.append(StepRecord(
                outcome.q, 0, 0, alpha.bits, beta.bits, outcome.q.bits))
            trace.gcd = beta
            return rules.symbol.zero(), trace

        m, reduced = rules.strip(gamma, counters)
        if even and m:
            raise IntegrityError(
                "remainder {} of an even-quotient step is divisible by the "
                "ramified prime".format(gamma))
        n, gamma = rules.normalize(reduced, counters)
        exponent += rules.step_exponent(m, n, beta, gamma)
        step = StepRecord(outcome.q, m, n, alpha.bits, beta.bits,
                          outcome.q.bits)
        trace.steps.append(step)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug("step {}: {}".format(len(trace.steps), step))
        alpha, beta = beta, gamma
    return rules.symbol(exponent), trace


def cubic_jacobi(alpha, beta, backend='exact', counters=None,
                 guard_bits=GUARD_BITS, norm_formula='standard'):
    """Cubic Jacobi symbol ``(alpha / beta)`` for a primary beta.

    :param alpha: any Eisenstein integer (or int)
    :param beta: primary Eisenstein integer, ``beta = +-1 mod 3``
    :param backend: ``exact`` or ``newton`` division
    :returns: ``(CubicSymbol, RunTrace)``
    :raises ContractError: when beta is not primary

    """
    alpha = _operand(alpha, EIS, 'alpha')
    beta = _operand(beta, EIS, 'beta')
    _require_primary(beta, _CUBIC)
    divide = divider(backend, guard_bits, norm_formula)
    return _descend(alpha, beta, _CUBIC, divide, counters)


def quartic_jacobi(alpha, beta, backend='exact', counters=None,
                   guard_bits=GUARD_BITS, norm_formula='standard'):
    """Quartic Jacobi symbol ``(alpha / beta)`` for a primary Gaussian
    beta (``b`` even, ``a + b = 1 mod 4``).
    """
    alpha = _operand(alpha, GAUSS, 'alpha')
    beta = _operand(beta, GAUSS, 'beta')
    _require_primary(beta, _QUARTIC)
    divide = divider(backend, guard_bits, norm_formula)
    return _descend(alpha, beta, _QUARTIC, divide, counters)


def _even_variant(alpha, beta, rules, step_cap, counters):
    alpha = _operand(alpha, rules.ring, 'alpha')
    beta = _operand(beta, rules.ring, 'beta')
    _require_primary(beta, rules)
    modulus = 3 if rules.ring == EIS else 2
    if (alpha.a + alpha.b) % modulus == 0:
        raise ContractError(
            "alpha = {} is divisible by the ramified prime: need {} not "
            "dividing a + b".format(alpha, modulus))
    return _descend(alpha, beta, rules, divmod_even, counters,
                    step_cap=step_cap, even=True)


def cubic_jacobi_even(alpha, beta, step_cap=DEFAULT_STEP_CAP,
                      counters=None):
    """Cubic symbol using only quotients divisible by ``1 - w``.

    The descent may need exponentially many steps;
    :class:`~eisjacobi.errors.StepCapExceeded` is raised once
    ``step_cap`` divisions have not finished it.
    """
    return _even_variant(alpha, beta, _CUBIC, step_cap, counters)


def quartic_jacobi_even(alpha, beta, step_cap=DEFAULT_STEP_CAP,
                        counters=None):
    """Quartic symbol using only quotients divisible by ``1 + i``."""
    return _even_variant(alpha, beta, _QUARTIC, step_cap, counters)


_DISPATCH = {
    (EIS, 'wh'): cubic_jacobi,
    (GAUSS, 'wh'): quartic_jacobi,
    (EIS, 'even'): cubic_jacobi_even,
    (GAUSS, 'even'): quartic_jacobi_even,
    }


def jacobi_symbol(alpha, beta, ring=None, alg='wh', backend='exact',
                  counters=None, step_cap=DEFAULT_STEP_CAP,
                  guard_bits=GUARD_BITS, norm_formula='standard'):
    """Symbol for any beta prime to the ramified prime.

    beta is replaced by its primary associate first, so the value is the
    symbol over the ideal generated by beta.
    """
    if ring is None:
        ring = getattr(beta, 'ring', EIS)
    if ring not in _RULES:
        raise ValueError("unknown ring '{}'".format(ring))
    if alg not in ALGORITHMS:
        raise ValueError("unknown algorithm '{}', expected one of {}"
                         .format(alg, ', '.join(ALGORITHMS)))
    rules = _RULES[ring]
    beta = _operand(beta, ring, 'beta')
    modulus = 3 if ring == EIS else 2
    if beta.is_zero or (beta.a + beta.b) % modulus == 0:
        raise ContractError(
            "beta = {} has no primary associate: need {} not dividing a + b"
            .format(beta, modulus))
    _, beta = rules.normalize(beta)
    compute = _DISPATCH[(ring, alg)]
    if alg == 'even':
        if backend != 'exact':
            raise ValueError("the even-quotient algorithm has no {} backend"
                             .format(backend))
        return compute(alpha, beta, step_cap=step_cap, counters=counters)
    return compute(alpha, beta, backend=backend, counters=counters,
                   guard_bits=guard_bits, norm_formula=norm_formula)


def ring_gcd(alpha, beta, counters=None):
    """Euclidean gcd by rounded division. A result prime to the ramified
    prime is returned as its primary associate.
    """
    if alpha.ring != beta.ring:
        raise ValueError("cannot take the gcd of {} and {} elements"
                         .format(alpha.ring, beta.ring))
    while not beta.is_zero:
        alpha, beta = beta, divmod_round(alpha, beta, counters).r
    if alpha.is_zero:
        return alpha
    modulus = 3 if alpha.ring == EIS else 2
    if (alpha.a + alpha.b) % modulus:
        _, alpha = _RULES[alpha.ring].normalize(alpha)
    return alpha


def replay_trace(trace, alpha, beta):
    """Re-run the recorded chain ``alpha' = beta``, ``beta' = gamma''``
    and return the visited ``(alpha, beta)`` pairs.

    :raises IntegrityError: when a recorded step does not reproduce

    """
    rules = _RULES[beta.ring]
    alpha = _operand(alpha, rules.ring, 'alpha')
    pairs = [(alpha, beta)]
    last = len(trace.steps) - 1
    for index, step in enumerate(trace.steps):
        gamma = ring_arith(alpha, ring_arith(step.q, beta, 'mul'), 'sub')
        if gamma.is_zero:
            if index != last:
                raise IntegrityError(
                    "step {} divides exactly but is not the last step"
                    .format(index + 1))
            break
        m, reduced = rules.strip(gamma)
        n, gamma = rules.normalize(reduced)
        if (m, n) != (step.m, step.n):
            raise IntegrityError(
                "step {} does not reproduce: recorded m={} n={}, got m={} n={}"
                .format(index + 1, step.m, step.n, m, n))
        alpha, beta = beta, gamma
        pairs.append((alpha, beta))
    return pairs
