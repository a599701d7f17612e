# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Worst-case inputs for the symbol algorithms."""
import mpmath

from .division import divmod_round
from .errors import DomainError
from .models import RecurrenceSpec
from .rings import EisensteinInt, GaussianInt, EIS, GAUSS, norm


__all__ = (
    'GROWTH_PRECISION_BITS', 'XI_CUBIC', 'XI_QUARTIC', 'FAMILIES',
    'xi_cubic', 'xi_quartic', 'xi_cubic_sequence', 'xi_quartic_sequence',
    'step4_stress', 'even_cubic_bad', 'even_quartic_bad',
    'growth_rate', 'log_norm', 'quartic_lockin_start', 'family_pair',
    )

GROWTH_PRECISION_BITS = 64

XI_CUBIC = RecurrenceSpec(
    ring=EIS,
    coefficient=EisensteinInt(0, 3),
    seeds=(EisensteinInt(-1, 0), EisensteinInt(2, 0)),
    dominant_root='-0.3675+2.6769w',
    dominant_root_modulus='2.8787',
    minor_root_modulus='0.3474',
    )
XI_QUARTIC = RecurrenceSpec(
    ring=GAUSS,
    coefficient=GaussianInt(2, 2),
    seeds=(GaussianInt(1, 0), GaussianInt(5, 0)),
    dominant_root='2.2720+1.7862i',
    dominant_root_modulus='2.8901',
    minor_root_modulus='0.3460',
    )


def _times_3w(x):
    # 3w (a + bw) = -3b + 3(a - b)w
    return EisensteinInt(-3 * x.b, 3 * (x.a - x.b))


def _times_2_2i(x):
    # 2(1 + i)(a + bi) = 2(a - b) + 2(a + b)i
    return GaussianInt(2 * (x.a - x.b), 2 * (x.a + x.b))


def _sequence(n, spec, step):
    if n < 0:
        raise DomainError("index must be nonnegative, got {}".format(n))
    terms = list(spec.seeds[:n + 1])
    while len(terms) <= n:
        terms.append(step(terms[-1]) + terms[-2])
    return terms


def xi_cubic_sequence(n):
    """``[xi_0, ..., xi_n]`` for ``xi_k = 3w xi_{k-1} + xi_{k-2}``,
    ``xi_0 = -1``, ``xi_1 = 2``. Every term is 2 mod 3.
    """
    return _sequence(n, XI_CUBIC, _times_3w)


def xi_quartic_sequence(n):
    """``[xi_0, ..., xi_n]`` for ``xi_k = 2(1+i) xi_{k-1} + xi_{k-2}``,
    ``xi_0 = 1``, ``xi_1 = 5``.
    """
    return _sequence(n, XI_QUARTIC, _times_2_2i)


def xi_cubic(n):
    return xi_cubic_sequence(n)[-1]


def xi_quartic(n):
    return xi_quartic_sequence(n)[-1]


def step4_stress(m):
    """``(3^m + (1 - w)^m + 1, 3^m + 1)``: the first quotient is 1 and its
    remainder ``(1 - w)^m`` takes m ramified removals.
    """
    if m < 1:
        raise DomainError("m must be at least 1, got {}".format(m))
    beta = EisensteinInt(3 ** m + 1, 0)
    return beta + EisensteinInt(1, -1) ** m, beta


def even_cubic_bad(k):
    """``((3k + 2)w, 1 + (3k + 3)w)``, which takes 4k + 3 invocations of the
    even-quotient cubic algorithm.
    """
    if k < 1:
        raise DomainError("k must be at least 1, got {}".format(k))
    return EisensteinInt(0, 3 * k + 2), EisensteinInt(1, 3 * k + 3)


def even_quartic_bad(m):
    """``(4m + 1, 4m - 3)``; every even-quotient step takes quotient 2 and
    moves to ``(4(m-1) + 1, 4(m-1) - 3)``.
    """
    if m < 2:
        raise DomainError("m must be at least 2, got {}".format(m))
    return GaussianInt(4 * m + 1, 0), GaussianInt(4 * m - 3, 0)


def log_norm(x, precision_bits=GROWTH_PRECISION_BITS):
    """Natural logarithm of ``N(x)`` from the exact integer norm."""
    with mpmath.workprec(precision_bits + 32):
        return +mpmath.log(mpmath.mpf(norm(x)))


def growth_rate(n, precision_bits=GROWTH_PRECISION_BITS):
    """``ln N(xi_n) / n`` for the cubic sequence."""
    if n < 10:
        raise DomainError("growth rate needs n >= 10, got {}".format(n))
    with mpmath.workprec(precision_bits + 32):
        return log_norm(xi_cubic(n), precision_bits) / n


def quartic_lockin_start(limit=500):
    """Least n0 such that ``divmod_round(xi_n, xi_{n-1})`` has quotient
    ``2 + 2i`` for every ``n0 <= n <= limit``.
    """
    if limit < 2:
        raise DomainError("limit must be at least 2, got {}".format(limit))
    terms = xi_quartic_sequence(limit)
    start = limit + 1
    for n in range(limit, 1, -1):
        if divmod_round(terms[n], terms[n - 1]).q != XI_QUARTIC.coefficient:
            break
        start = n
    return start


def _xi_pair(sequence):
    def pair(n):
        if n < 1:
            raise DomainError("n must be at least 1, got {}".format(n))
        terms = sequence(n)
        return terms[n], terms[n - 1]
    return pair


FAMILIES = {
    'xi3': _xi_pair(xi_cubic_sequence),
    'xi4': _xi_pair(xi_quartic_sequence),
    'step4': step4_stress,
    'even3': even_cubic_bad,
    'even4': even_quartic_bad,
    }


def family_pair(family, n):
    """The ``(alpha, beta)`` input of the named family at parameter n."""
    try:
        generate = FAMILIES[family]
    except KeyError:
        raise ValueError("unknown family '{}', expected one of {}"
                         .format(family, ', '.join(sorted(FAMILIES))))
    return generate(n)
