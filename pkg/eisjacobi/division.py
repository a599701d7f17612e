# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Division with remainder in Z[w] and Z[i].

Four modes share one contract, ``alpha = q * beta + r``:

- :func:`divmod_round` rounds both coordinates of ``alpha / beta``
  exactly, giving ``N(r) <= 3/4 N(beta)`` (1/2 in Z[i]);
- :func:`remainder_jacobi` reduces ``alpha * conj(beta)`` modulo
  ``N(beta)`` to absolutely least residues and maps back;
- :func:`divmod_newton` multiplies by a dyadic approximation of
  ``1 / beta`` built by Newton iteration on the leading bits of beta;
- :func:`divmod_even` adjusts the rounded quotient by a unit so that it
  is divisible by the ramified prime.
"""
import functools
import logging

from .errors import DomainError, IntegrityError
from .models import DivisionOutcome, DyadicComplex
from .rings import (
    EIS, GAUSS, bitlen, conj, element, int_add, int_exact_div, int_round_div,
    int_sub, norm, ring_arith, units,
    )
from .utils import abs_least_residue


__all__ = (
    'GUARD_BITS', 'NEWTON_START_PRECISION', 'MAX_NEWTON_ITERATIONS',
    'BACKENDS', 'divmod_round', 'remainder_jacobi', 'newton_start',
    'newton_residual', 'newton_inverse', 'divmod_newton', 'divmod_even',
    'divider',
    )

logger = logging.getLogger('eisjacobi')

GUARD_BITS = 8
NEWTON_START_PRECISION = 4
MAX_NEWTON_ITERATIONS = 64

# Divisibility by the ramified prime: 1 - w needs 3 | a + b, 1 + i needs
# 2 | a + b.
_RAMIFIED_MODULUS = {EIS: 3, GAUSS: 2}
# Units u with q + u divisible, keyed by ring and q.a + q.b mod the modulus,
# in unit order.
_ADJUSTMENTS = dict(
    (ring, dict(
        (residue, tuple(unit for unit in units(ring)
                        if (residue + unit.a + unit.b) % modulus == 0))
        for residue in range(1, modulus)))
    for ring, modulus in _RAMIFIED_MODULUS.items())


def _check_operands(alpha, beta):
    if alpha.ring != beta.ring:
        raise ValueError("cannot divide a {} element by a {} element"
                         .format(alpha.ring, beta.ring))
    if beta.is_zero:
        raise ZeroDivisionError("division by the zero {} element"
                                .format(beta.ring))


def _remainder(alpha, q, beta, counters):
    return ring_arith(alpha, ring_arith(q, beta, 'mul', counters), 'sub',
                      counters)


def _round_quotient(alpha, beta, beta_norm, counters):
    t = ring_arith(alpha, conj(beta, counters), 'mul', counters)
    q = type(alpha)(int_round_div(t.a, beta_norm, counters),
                    int_round_div(t.b, beta_norm, counters))
    return DivisionOutcome(q, _remainder(alpha, q, beta, counters), beta)


def divmod_round(alpha, beta, counters=None, norm_formula='standard'):
    """Quotient with each coordinate of ``alpha * conj(beta) / N(beta)``
    rounded to the nearest integer (halves toward +inf).
    """
    _check_operands(alpha, beta)
    return _round_quotient(alpha, beta, norm(beta, counters, norm_formula),
                           counters)


def remainder_jacobi(alpha, beta, counters=None):
    """``[alpha * conj(beta) mod N(beta)] * beta / N(beta)`` using
    absolutely least residues in ``[-N/2, N/2)``.
    """
    _check_operands(alpha, beta)
    n = norm(beta, counters)
    t = ring_arith(alpha, conj(beta, counters), 'mul', counters)
    reduced = type(alpha)(abs_least_residue(t.a, n),
                          abs_least_residue(t.b, n))
    if counters is not None:
        counters.charge_div(bitlen(t.a) + 1, bitlen(n) + 1)
        counters.charge_div(bitlen(t.b) + 1, bitlen(n) + 1)
    product = ring_arith(reduced, beta, 'mul', counters)
    return type(alpha)(int_exact_div(product.a, n, counters),
                       int_exact_div(product.b, n, counters))


# Newton inversion

def _dyadic_product(x, y, counters):
    """Exact product of two dyadic values of the same ring."""
    numerators = ring_arith(_numerators(x), _numerators(y), 'mul', counters)
    return DyadicComplex(numerators.a, numerators.b, x.exp + y.exp, x.ring)


def _numerators(x):
    return element(x.ring, x.u, x.v)


def _truncate(x, exp):
    """Drop fractional bits of ``x`` beyond ``exp`` (floor per coordinate)."""
    if x.exp <= exp:
        return x
    shift = x.exp - exp
    return DyadicComplex(x.u >> shift, x.v >> shift, exp, x.ring)


def newton_start(beta):
    """Starting value ``conj(beta) / 2**e`` with ``e = 2L + 2``, L the bit
    length of beta's larger coordinate.
    """
    if beta.is_zero:
        raise ZeroDivisionError("the zero element has no inverse")
    c = conj(beta)
    return DyadicComplex(c.a, c.b, 2 * beta.bits + 2, beta.ring)


def _residual(beta, xi, bits, counters):
    """``1 - beta * xi`` with beta cut to its leading ``bits`` bits."""
    shift = max(beta.bits - bits, 0)
    leading = type(beta)(beta.a >> shift, beta.b >> shift)
    product = ring_arith(leading, _numerators(xi), 'mul', counters)
    exp = xi.exp - shift
    return DyadicComplex(int_sub(1 << exp, product.a, counters), -product.b,
                         exp, beta.ring)


def newton_residual(beta, xi, counters=None):
    """Exact ``1 - beta * xi`` as a dyadic value."""
    return _residual(beta, xi, beta.bits, counters)


def _accuracy(residual):
    # both coordinates of the residual are below 2**(-accuracy)
    return residual.exp - residual.bits


def _residual_below(residual, target):
    # |u|, |v| < 2**(exp - target - 1) bounds N(u + v basis) by
    # 3 * 4**(exp - target - 1) < 4**(exp - target)
    limit = residual.exp - target - 1
    return (limit >= 0 and abs(residual.u) >> limit == 0
            and abs(residual.v) >> limit == 0)


def _newton_step(xi, residual, precision, length, counters):
    """``xi + xi * residual`` kept to ``length + precision + 4`` fractional
    bits, the residual cut to ``precision + 5``.
    """
    correction = _dyadic_product(
        xi, _truncate(residual, precision + 5), counters)
    shift = correction.exp - xi.exp
    xi = DyadicComplex(
        int_add(xi.u << shift, correction.u, counters),
        int_add(xi.v << shift, correction.v, counters),
        correction.exp, xi.ring)
    return _truncate(xi, length + precision + 4)


def newton_inverse(beta, m, counters=None, guard_bits=GUARD_BITS):
    """Dyadic ``xi`` with ``N(1 - beta * xi) < 2**(-2(m + g))``.

    Each iteration works on the leading bits of beta only, twice as many
    as the accuracy already reached (at least
    :data:`NEWTON_START_PRECISION`, at most ``m + g + 2``). Once that
    accuracy covers ``m + g`` bits the residual of all of beta is
    evaluated exactly; the iteration continues from it until the bound
    holds.

    :param beta: nonzero element of Z[w] or Z[i]
    :param m: requested digits, at least 1
    :param guard_bits: the extra bits ``g``
    :rtype: :class:`~eisjacobi.models.DyadicComplex`

    """
    if beta.is_zero:
        raise ZeroDivisionError("the zero element has no inverse")
    if m < 1:
        raise ValueError("at least one digit is required, got {}".format(m))
    target = m + guard_bits
    final = target + 2
    length = beta.bits
    xi = _truncate(newton_start(beta), length + NEWTON_START_PRECISION + 4)
    reached = 0
    for iteration in range(MAX_NEWTON_ITERATIONS):
        precision = min(max(2 * reached, NEWTON_START_PRECISION), final)
        if reached > target:
            residual = newton_residual(beta, xi, counters)
            if _residual_below(residual, target):
                logger.debug("newton: {} iterations to {} bits"
                             .format(iteration, target))
                return xi
        else:
            residual = _residual(beta, xi, precision + 6, counters)
        accuracy = _accuracy(residual)
        xi = _newton_step(xi, residual, precision, length, counters)
        reached = min(2 * accuracy - 2, precision)
    raise IntegrityError(
        "Newton inversion of {} did not reach {} bits in {} iterations"
        .format(beta, target, MAX_NEWTON_ITERATIONS))


def divmod_newton(alpha, beta, counters=None, guard_bits=GUARD_BITS):
    """Quotient from ``alpha * xi`` rounded coordinate-wise, xi carrying
    ``max(k - l, 0) + g`` digits for k-bit alpha and l-bit beta.
    The remainder is exact and ``N(r) <= (3/4 + 3 * 2**-g) N(beta)``.
    """
    _check_operands(alpha, beta)
    digits = max(alpha.bits - beta.bits, 0) + guard_bits
    xi = newton_inverse(beta, digits, counters, guard_bits)
    approx = _dyadic_product(
        DyadicComplex(alpha.a, alpha.b, 0, alpha.ring), xi, counters)
    half = 1 << (approx.exp - 1)
    q = type(alpha)(int_add(approx.u, half, counters) >> approx.exp,
                    int_add(approx.v, half, counters) >> approx.exp)
    return DivisionOutcome(q, _remainder(alpha, q, beta, counters), beta)


def divmod_even(alpha, beta, counters=None):
    """Division with ``N(r) < N(beta)`` whose quotient is divisible by the
    ramified prime (1 - w in Z[w], 1 + i in Z[i]) whenever ``r != 0``.

    An exact division returns the rounded quotient as it is, divisible or
    not. Otherwise a rounded quotient that qualifies is kept, and every
    unit that moves it into the ramified ideal is tried; the smallest
    remainder norm wins, ties going to the earlier unit in
    ``1, w, w^2, -1, -w, -w^2`` (``1, i, -1, -i``).
    """
    _check_operands(alpha, beta)
    beta_norm = norm(beta, counters)
    if beta_norm <= 1:
        raise DomainError(
            "even-quotient division needs N(beta) > 1, got N({}) = {}"
            .format(beta, beta_norm))
    rounded = _round_quotient(alpha, beta, beta_norm, counters)
    modulus = _RAMIFIED_MODULUS[alpha.ring]
    q0 = rounded.q
    residue = (q0.a + q0.b) % modulus
    if residue == 0 or rounded.r.is_zero:
        return rounded

    best = None
    for unit in _ADJUSTMENTS[alpha.ring][residue]:
        r = ring_arith(rounded.r, ring_arith(unit, beta, 'mul', counters),
                       'sub', counters)
        r_norm = norm(r, counters)
        if r_norm < beta_norm and (best is None or r_norm < best[0]):
            best = (r_norm, ring_arith(q0, unit, 'add', counters), r)
    if best is None:
        raise IntegrityError(
            "no unit adjustment of {} gives a smaller remainder for {} / {}"
            .format(q0, alpha, beta))
    _, q, r = best
    return DivisionOutcome(q, r, beta)


BACKENDS = {
    'exact': divmod_round,
    'newton': divmod_newton,
    }


def divider(backend, guard_bits=GUARD_BITS, norm_formula='standard'):
    """Division function ``divide(alpha, beta, counters)`` for the named
    backend.
    """
    try:
        divide = BACKENDS[backend]
    except KeyError:
        raise ValueError("unknown backend '{}', expected one of {}"
                         .format(backend, ', '.join(sorted(BACKENDS))))
    if divide is divmod_newton:
        return functools.partial(divide, guard_bits=guard_bits)
    return functools.partial(divide, norm_formula=norm_formula)
