# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Power residues modulo rational primes.

Reference characters by Euler's criterion, a factoring oracle for
composite moduli, modular square roots, the norm equations
``p = s^2 + 3 t^2`` and ``p = x^2 + y^2`` and residue tests that either
exponentiate mod p or evaluate one Jacobi symbol per query.
"""
import logging

import gmpy2
from sympy import factorint

from .division import remainder_jacobi
from .errors import ContractError, DomainError, IntegrityError, \
    OracleRefusal
from .models import (
    SYMBOL_TYPES, NormEquationSolution, TwoSquares,
    )
from .rings import (
    EIS, GAUSS, EIS_UNITS, GAUSS_UNITS, RING_TYPES, EisensteinInt,
    GaussianInt, bitlen, conj, exact_divide, is_primary, is_unit, norm,
    ring_arith, unit_normalize_eis, unit_normalize_gauss,
    )
from .symbols import cubic_jacobi, quartic_jacobi
from .utils import exact_isqrt, is_prime, primes_in_class


__all__ = (
    'ORACLE_NORM_LIMIT', 'TABLE_MINIMUM', 'STRATEGIES', 'TABLE_KINDS',
    'TABLE_METHODS',
    'euler_cubic_char', 'euler_quartic_char', 'jacobi_oracle',
    'primes_over', 'sqrt_mod_p', 'solve_s2_3t2', 'norm_equation_eis',
    'sqrt_neg3_from_partition', 'sqrt_neg1_from_partition', 'solve_x2_y2',
    'gaussian_prime_over', 'residue_test', 'residue_test_batch',
    'partition_table',
    )

logger = logging.getLogger('eisjacobi')

ORACLE_NORM_LIMIT = 10 ** 8
TABLE_MINIMUM = 7
STRATEGIES = ('euler', 'reciprocity', 'auto')
TABLE_KINDS = ('s2_3t2', 'x2_y2')
TABLE_METHODS = ('descent', 'enumerate')

_ROOTS_OF_UNITY = {EIS: EIS_UNITS[:3], GAUSS: GAUSS_UNITS}
_ORDERS = {EIS: 3, GAUSS: 4}
_POWERS = {3: EIS, 4: GAUSS, 'cubic': EIS, 'quartic': GAUSS}


# Characters

def _power_mod(base, exponent, modulus):
    result = type(base)(1, 0)
    while exponent:
        if exponent & 1:
            result = remainder_jacobi(ring_arith(result, base, 'mul'),
                                      modulus)
        exponent >>= 1
        if exponent:
            base = remainder_jacobi(ring_arith(base, base, 'mul'), modulus)
    return result


def _euler_char(alpha, pi, ring):
    if isinstance(alpha, int):
        alpha = RING_TYPES[ring](alpha, 0)
    if alpha.ring != ring or pi.ring != ring:
        raise ValueError("expected {} elements".format(ring))
    if not is_primary(pi):
        raise ContractError("pi = {} is not primary".format(pi))
    symbol = SYMBOL_TYPES[ring]
    order = _ORDERS[ring]
    pi_norm = norm(pi)
    if pi_norm == 1:
        return symbol(0)
    if (pi_norm - 1) % order:
        raise DomainError("N({}) = {} is not 1 mod {}"
                          .format(pi, pi_norm, order))
    base = remainder_jacobi(alpha, pi)
    if base.is_zero:
        return symbol.zero()
    power = _power_mod(base, (pi_norm - 1) // order, pi)
    for k, root in enumerate(_ROOTS_OF_UNITY[ring]):
        if remainder_jacobi(ring_arith(power, root, 'sub'), pi).is_zero:
            return symbol(k)
    raise IntegrityError(
        "{}^(({} - 1)/{}) is not a root of unity mod {}; is it prime?"
        .format(alpha, pi_norm, order, pi))


def euler_cubic_char(alpha, pi):
    """``alpha**((N(pi) - 1)/3) mod pi`` as a power of w, or zero."""
    return _euler_char(alpha, pi, EIS)


def euler_quartic_char(alpha, pi):
    """``alpha**((N(pi) - 1)/4) mod pi`` as a power of i, or zero."""
    return _euler_char(alpha, pi, GAUSS)


_CHARACTERS = {EIS: euler_cubic_char, GAUSS: euler_quartic_char}


def gaussian_prime_over(p):
    """Primary Gaussian prime of norm p for ``p = 1 mod 4``."""
    squares = solve_x2_y2(p)
    return unit_normalize_gauss(GaussianInt(squares.x, squares.y))[1]


def primes_over(p, ring):
    """Primary primes of the ring lying over the rational prime p.
    The ramified prime is left out since it is never primary.
    """
    if ring == EIS:
        if p == 3:
            return []
        if p % 3 == 2:
            return [EisensteinInt(p, 0)]
        pi = norm_equation_eis(p).pi
        return [pi, conj(pi)]
    if p == 2:
        return []
    if p % 4 == 3:
        return [unit_normalize_gauss(GaussianInt(p, 0))[1]]
    pi = gaussian_prime_over(p)
    return [pi, conj(pi)]


def jacobi_oracle(alpha, beta):
    """Jacobi symbol as the product of prime characters over a
    factorization of beta. Desk scale only.

    :raises OracleRefusal: when ``N(beta)`` exceeds :data:`ORACLE_NORM_LIMIT`

    """
    ring = beta.ring
    if not is_primary(beta):
        raise ContractError("beta = {} is not primary".format(beta))
    beta_norm = norm(beta)
    if beta_norm > ORACLE_NORM_LIMIT:
        raise OracleRefusal(
            "N({}) = {} exceeds the oracle limit {}"
            .format(beta, beta_norm, ORACLE_NORM_LIMIT))
    character = _CHARACTERS[ring]
    result = SYMBOL_TYPES[ring](0)
    remaining = beta
    for p in sorted(factorint(beta_norm)):
        for pi in primes_over(int(p), ring):
            while remainder_jacobi(remaining, pi).is_zero:
                remaining = exact_divide(remaining, pi)
                result = result * character(alpha, pi)
    if not is_unit(remaining):
        raise IntegrityError("{} left the unfactored part {}"
                             .format(beta, remaining))
    return result


# Square roots and norm equations

def sqrt_mod_p(a, p):
    """Smaller square root of a modulo the odd prime p (Tonelli-Shanks,
    least quadratic nonresidue found by ascending search).
    """
    if not is_prime(p):
        raise DomainError("{} is not prime".format(p))
    a %= p
    if a == 0:
        raise DomainError("0 has no root in 0 < s < {}".format(p))
    if p == 2:
        return 1
    if pow(a, (p - 1) // 2, p) != 1:
        raise DomainError("{} is not a square mod {}".format(a, p))
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 1, t * t % p
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def _descent(p, d):
    """``(u, v)`` with ``u^2 + d v^2 = p`` via the Euclidean remainder
    sequence of p and a root of ``-d`` mod p, stopped below sqrt(p).
    """
    root = sqrt_mod_p(-d % p, p)
    limit = int(gmpy2.isqrt(p))
    for start in (max(root, p - root), min(root, p - root)):
        a, b = p, start
        while b > limit:
            a, b = b, a % b
        rest = p - b * b
        if rest % d == 0:
            v = exact_isqrt(rest // d)
            if v:
                return b, v
    raise IntegrityError("no solution of u^2 + {}v^2 = {}".format(d, p))


def solve_s2_3t2(p):
    """Positive ``(s, t)`` with ``s^2 + 3 t^2 = p`` for a prime
    ``p = 1 mod 3``.
    """
    if not is_prime(p) or p % 3 != 1:
        raise DomainError("{} is not a prime = 1 mod 3".format(p))
    return _descent(p, 3)


def norm_equation_eis(p):
    """:class:`~eisjacobi.models.NormEquationSolution` of
    ``x^2 - x y + y^2 = p`` with its primary prime ``pi``.
    """
    s, t = solve_s2_3t2(p)
    x, y = s + t, 2 * t
    _, pi = unit_normalize_eis(EisensteinInt(x, y))
    return NormEquationSolution(p, s, t, x, y, pi)


def solve_x2_y2(p):
    """:class:`~eisjacobi.models.TwoSquares` with ``x < y`` for a prime
    ``p = 1 mod 4``.
    """
    if not is_prime(p) or p % 4 != 1:
        raise DomainError("{} is not a prime = 1 mod 4".format(p))
    u, v = _descent(p, 1)
    return TwoSquares(p, min(u, v), max(u, v))


def _inverse_mod(value, p, what):
    if value % p == 0:
        raise DomainError("{} vanishes mod {}".format(what, p))
    return int(gmpy2.invert(value % p, p))


def sqrt_neg3_from_partition(x, y, p):
    """``(x + y) / (x - y) mod p``, a square root of -3."""
    if x * x - x * y + y * y != p:
        raise DomainError("{}^2 - {}*{} + {}^2 != {}".format(x, x, y, y, p))
    return (x + y) * _inverse_mod(x - y, p, 'x - y') % p


def sqrt_neg1_from_partition(x, y, p):
    """``y / x mod p``, a square root of -1."""
    if x * x + y * y != p:
        raise DomainError("{}^2 + {}^2 != {}".format(x, y, p))
    return y * _inverse_mod(x, p, 'x') % p


# Residue tests

def _ring_for_power(power):
    try:
        return _POWERS[power]
    except KeyError:
        raise ValueError("unknown power {!r}, expected 3 or 4".format(power))


def _every_unit_is_residue(p, ring):
    if ring == EIS:
        return p == 3 or p % 3 == 2
    if p == 2:
        return True
    if p % 4 == 3:
        raise DomainError(
            "quartic residue tests need p = 1 mod 4, got {}".format(p))
    return False


def _split_prime(p, ring):
    if ring == EIS:
        return norm_equation_eis(p).pi
    return gaussian_prime_over(p)


def residue_test_batch(p, values, power, strategy='auto'):
    """One boolean per value: is it a cubic (power 3) or quartic
    (power 4) residue mod p. The reciprocity strategy computes the prime
    over p once and evaluates one Jacobi symbol per value; ``auto``
    picks it when there are at least ``bitlen(p)`` values.
    """
    ring = _ring_for_power(power)
    if strategy not in STRATEGIES:
        raise ValueError("unknown strategy '{}', expected one of {}"
                         .format(strategy, ', '.join(STRATEGIES)))
    if not is_prime(p):
        raise DomainError("{} is not prime".format(p))
    values = list(values)
    for a in values:
        if a % p == 0:
            raise DomainError("{} is not prime to {}".format(a, p))
    if _every_unit_is_residue(p, ring):
        return [True] * len(values)
    if strategy == 'auto':
        strategy = 'reciprocity' if len(values) >= bitlen(p) else 'euler'
    logger.debug("residue test mod {} for {} values by {}"
                 .format(p, len(values), strategy))

    if strategy == 'euler':
        exponent = (p - 1) // _ORDERS[ring]
        return [pow(a, exponent, p) == 1 for a in values]
    pi = _split_prime(p, ring)
    symbol = cubic_jacobi if ring == EIS else quartic_jacobi
    return [symbol(a % p, pi)[0].exponent == 0 for a in values]


def residue_test(a, p, power, strategy='auto'):
    return residue_test_batch(p, [a], power, strategy)[0]


# Tabulation

def _descent_rows(limit, kind):
    if kind == 's2_3t2':
        for p in primes_in_class(limit, 3, 1):
            s, t = solve_s2_3t2(p)
            yield p, s, t
    else:
        for p in primes_in_class(limit, 4, 1):
            squares = solve_x2_y2(p)
            yield p, squares.x, squares.y


def _enumerated_rows(limit, kind):
    rows = []
    if kind == 's2_3t2':
        eligible = set(primes_in_class(limit, 3, 1))
        t = 1
        while 3 * t * t < limit:
            s = 1
            while s * s + 3 * t * t <= limit:
                if s * s + 3 * t * t in eligible:
                    rows.append((s * s + 3 * t * t, s, t))
                s += 1
            t += 1
    else:
        eligible = set(primes_in_class(limit, 4, 1))
        x = 1
        while 2 * x * x < limit:
            y = x + 1
            while x * x + y * y <= limit:
                if x * x + y * y in eligible:
                    rows.append((x * x + y * y, x, y))
                y += 1
            x += 1
    rows.sort()
    return iter(rows)


def partition_table(limit, kind='s2_3t2', method='descent'):
    """Rows ``(p, s, t)`` (``s2_3t2``) or ``(p, x, y)`` (``x2_y2``) for
    every eligible prime ``p <= limit`` in increasing order.

    ``descent`` solves each prime separately; ``enumerate`` walks all
    small pairs and sorts their prime values.
    """
    if limit < TABLE_MINIMUM:
        raise DomainError("table limit must be at least {}, got {}"
                          .format(TABLE_MINIMUM, limit))
    if kind not in TABLE_KINDS:
        raise ValueError("unknown table kind '{}', expected one of {}"
                         .format(kind, ', '.join(TABLE_KINDS)))
    if method not in TABLE_METHODS:
        raise ValueError("unknown table method '{}', expected one of {}"
                         .format(method, ', '.join(TABLE_METHODS)))
    if method == 'descent':
        return _descent_rows(limit, kind)
    return _enumerated_rows(limit, kind)
