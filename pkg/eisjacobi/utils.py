# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Various standalone integer helpers that provide specific outcomes"""
import gmpy2
from sympy import isprime, sieve


__all__ = (
    'round_half_up', 'abs_least_residue', 'exact_isqrt', 'is_prime',
    'primes_in_class',
)


def round_half_up(numerator, denominator):
    """Round ``numerator / denominator`` to the nearest integer.
    Exact halves go toward positive infinity.

    :param numerator: dividend
    :type numerator: int
    :param denominator: positive divisor
    :type denominator: int
    :rtype: int

    """
    return (2 * numerator + denominator) // (2 * denominator)


def abs_least_residue(value, modulus):
    """Residue of ``value`` in ``[-modulus/2, modulus/2)``."""
    return value - modulus * round_half_up(value, modulus)


def exact_isqrt(n):
    """Integer square root of ``n`` when ``n`` is a perfect square,
    otherwise ``None``.
    """
    if n < 0 or not gmpy2.is_square(n):
        return None
    return int(gmpy2.isqrt(n))


def is_prime(n):
    return n > 1 and bool(isprime(n))


def primes_in_class(limit, modulus, residue, start=2):
    """Primes ``start <= p <= limit`` with ``p % modulus == residue``,
    in increasing order, enumerated by the sieve of Eratosthenes.
    """
    if limit < start:
        return []
    return [int(p) for p in sieve.primerange(start, limit + 1)
            if p % modulus == residue]
