# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Bit-operation accounting under standard (schoolbook) arithmetic.

Multiplying an m-bit integer by an n-bit integer costs ``m * n``.
Dividing an m-bit integer by an n-bit one costs the product of quotient
length and divisor length, ``(m - n + 1) * n``, and is booked as
multiplication cost. Additions and subtractions cost the longer operand
length. Comparisons are free.

The counters are only ever touched through an explicitly passed
:class:`CostCounters`; the integer entry points that charge them live
in :mod:`eisjacobi.rings`.
"""
import mpmath

from .errors import FitError


__all__ = (
    'COUNTER_FIELDS', 'CostCounters',
    'charge_mul', 'charge_add', 'charge_div', 'snapshot',
    'multiplication_cost', 'fit_exponent',
    )


COUNTER_FIELDS = (
    'mul_cost', 'add_cost', 'div_steps', 'ramified_removals',
    'remainder_volume',
    )


def multiplication_cost(m, n=None):
    """Modeled bops for an m-bit by n-bit product (n defaults to m)."""
    if n is None:
        n = m
    return m * n


class CostCounters(object):
    """Monotone counters for one run. Single owner; merge with ``+``."""

    __slots__ = COUNTER_FIELDS

    def __init__(self, mul_cost=0, add_cost=0, div_steps=0,
                 ramified_removals=0, remainder_volume=0):
        self.mul_cost = mul_cost
        self.add_cost = add_cost
        self.div_steps = div_steps
        self.ramified_removals = ramified_removals
        self.remainder_volume = remainder_volume

    def charge_mul(self, m, n):
        self.mul_cost += multiplication_cost(m, n)

    def charge_add(self, n):
        self.add_cost += n

    def charge_div(self, num_bits, den_bits):
        quotient_bits = max(1, num_bits - den_bits + 1)
        self.mul_cost += multiplication_cost(quotient_bits, den_bits)

    @property
    def model_cost(self):
        return self.mul_cost + self.add_cost

    def snapshot(self):
        return dict((name, getattr(self, name)) for name in COUNTER_FIELDS)

    def __add__(self, other):
        if not isinstance(other, CostCounters):
            return NotImplemented
        return CostCounters(**dict(
            (name, getattr(self, name) + getattr(other, name))
            for name in COUNTER_FIELDS))

    def __eq__(self, other):
        if not isinstance(other, CostCounters):
            return NotImplemented
        return self.snapshot() == other.snapshot()

    def __repr__(self):
        return 'CostCounters({})'.format(', '.join(
            '{}={}'.format(name, getattr(self, name))
            for name in COUNTER_FIELDS))


def _check_lengths(*lengths):
    for length in lengths:
        if length < 1:
            raise ValueError(
                "bit lengths must be positive, got {}".format(length))


def charge_mul(counters, m, n):
    _check_lengths(m, n)
    counters.charge_mul(m, n)


def charge_add(counters, n):
    _check_lengths(n)
    counters.charge_add(n)


def charge_div(counters, num_bits, den_bits):
    _check_lengths(num_bits, den_bits)
    counters.charge_div(num_bits, den_bits)


def snapshot(counters):
    """Counter values keyed by name, in :data:`COUNTER_FIELDS` order."""
    return counters.snapshot()


def fit_exponent(points):
    """Least-squares slope of ``ln(cost)`` against ``ln(size)``.

    :param points: ``(size, cost)`` pairs, at least four, sizes strictly
                   increasing and positive, costs positive
    :type points: iterable of tuple
    :return: fitted exponent
    :rtype: float

    """
    points = list(points)
    if any(int(size) != size for size, _ in points):
        raise FitError("sizes must be integers: {}"
                       .format([size for size, _ in points]))
    points = [(int(size), cost) for size, cost in points]
    if len(points) < 4:
        raise FitError("need at least 4 points, got {}".format(len(points)))
    sizes = [size for size, _ in points]
    if any(size <= 0 for size in sizes):
        raise FitError("sizes must be positive: {}".format(sizes))
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise FitError("sizes must be strictly increasing: {}".format(sizes))
    if any(cost <= 0 for _, cost in points):
        raise FitError("costs must be positive")

    with mpmath.workprec(113):
        xs = [mpmath.log(size) for size, _ in points]
        ys = [mpmath.log(cost) for _, cost in points]
        x_mean = mpmath.fsum(xs) / len(xs)
        y_mean = mpmath.fsum(ys) / len(ys)
        sxx = mpmath.fsum((x - x_mean) ** 2 for x in xs)
        sxy = mpmath.fsum((x - x_mean) * (y - y_mean)
                          for x, y in zip(xs, ys))
        return float(sxy / sxx)
