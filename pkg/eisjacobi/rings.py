# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Exact arithmetic in the Eisenstein integers Z[w] and the Gaussian
integers Z[i].

Elements are stored as coordinate pairs ``(a, b)`` over the basis
``{1, w}`` (w a primitive cube root of unity, ``w**2 = -1 - w``) or
``{1, i}``. Every integer product, sum and quotient taken here goes
through :func:`int_mul`, :func:`int_add`, :func:`int_sub` or
:func:`int_divmod`, which charge an optional
:class:`~eisjacobi.costmodel.CostCounters`.
"""
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, IntegrityError, RingParseError
from .utils import round_half_up


__all__ = (
    'EIS', 'GAUSS', 'RINGS', 'BASIS_LETTERS', 'RING_TYPES',
    'EisensteinInt', 'GaussianInt', 'EisClass', 'GaussClass',
    'EIS_UNITS', 'GAUSS_UNITS', 'NORM_FORMULAS',
    'bitlen', 'int_mul', 'int_add', 'int_sub', 'int_divmod',
    'int_round_div', 'int_exact_div',
    'eis_arith', 'eis_norm', 'eis_conj',
    'gauss_arith', 'gauss_norm', 'gauss_conj',
    'ring_arith', 'norm', 'conj', 'element', 'ring_power', 'exact_divide',
    'is_unit', 'unit_index', 'units', 'is_primary', 'is_two_primary',
    'two_primary_associate',
    'classify_eis', 'classify_gauss',
    'remove_ramified', 'unit_normalize_eis',
    'remove_even', 'unit_normalize_gauss',
    'parse_ring_element', 'format_ring_element',
    )


EIS = 'eis'
GAUSS = 'gauss'
RINGS = (EIS, GAUSS)
BASIS_LETTERS = {EIS: 'w', GAUSS: 'i'}

ZERO = 'zero'
UNIT = 'unit'
PRIMARY = 'primary'
PRIMARY_PLUS = 'primary_plus'
PRIMARY_MINUS = 'primary_minus'
RAMIFIED_DIVISIBLE = 'ramified_divisible'
EVEN_DIVISIBLE = 'even_divisible'
OTHER = 'other'

NORM_FORMULAS = ('standard', 'shifted', 'diagonal')


def bitlen(n):
    """Discrete binary logarithm: 1 for zero, else floor(log2|n|) + 1."""
    return max(1, abs(n).bit_length())


# The audited integer entry points.

def int_mul(x, y, counters=None):
    if counters is not None:
        counters.charge_mul(bitlen(x), bitlen(y))
    return x * y


def int_add(x, y, counters=None):
    if counters is not None:
        counters.charge_add(max(bitlen(x), bitlen(y)))
    return x + y


def int_sub(x, y, counters=None):
    if counters is not None:
        counters.charge_add(max(bitlen(x), bitlen(y)))
    return x - y


def int_divmod(x, y, counters=None):
    if counters is not None:
        counters.charge_div(bitlen(x), bitlen(y))
    return divmod(x, y)


def int_round_div(x, y, counters=None):
    """Nearest integer to ``x / y`` for ``y > 0``, halves toward +inf."""
    if counters is not None:
        counters.charge_div(bitlen(x) + 1, bitlen(y) + 1)
    return round_half_up(x, y)


def int_exact_div(x, y, counters=None):
    quotient, remainder = int_divmod(x, y, counters)
    if remainder:
        raise IntegrityError("{} is not divisible by {}".format(x, y))
    return quotient


@dataclass(frozen=True)
class _QuadraticInt(object):
    a: int = 0
    b: int = 0

    ring = None

    def __post_init__(self):
        object.__setattr__(self, 'a', int(self.a))
        object.__setattr__(self, 'b', int(self.b))

    @classmethod
    def from_int(cls, value):
        return cls(value, 0)

    @property
    def is_zero(self):
        return self.a == 0 and self.b == 0

    @property
    def bits(self):
        """Bit length of the larger coordinate."""
        return max(bitlen(self.a), bitlen(self.b))

    def __neg__(self):
        return type(self)(-self.a, -self.b)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_arith(self, other, 'add')

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_arith(self, other, 'sub')

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_arith(other, self, 'sub')

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_arith(self, other, 'mul')

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return ring_power(self, exponent)

    def __str__(self):
        return format_ring_element(self)

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)(other, 0)
        if type(other) is type(self):
            return other
        return None


@dataclass(frozen=True)
class EisensteinInt(_QuadraticInt):
    """``a + b*w`` with ``w = -1/2 + sqrt(-3)/2``."""

    ring = EIS


@dataclass(frozen=True)
class GaussianInt(_QuadraticInt):
    """``a + b*i``."""

    ring = GAUSS


RING_TYPES = {EIS: EisensteinInt, GAUSS: GaussianInt}

# Unit order used for deterministic tie-breaks: w**k then -w**k.
EIS_UNITS = (
    EisensteinInt(1, 0), EisensteinInt(0, 1), EisensteinInt(-1, -1),
    EisensteinInt(-1, 0), EisensteinInt(0, -1), EisensteinInt(1, 1),
    )
GAUSS_UNITS = (
    GaussianInt(1, 0), GaussianInt(0, 1),
    GaussianInt(-1, 0), GaussianInt(0, -1),
    )
_UNITS = {EIS: EIS_UNITS, GAUSS: GAUSS_UNITS}


def _ring_type(ring):
    try:
        return RING_TYPES[ring]
    except KeyError:
        raise ValueError("unknown ring '{}', expected one of {}"
                         .format(ring, ', '.join(RINGS)))


def element(ring, a, b=0):
    return _ring_type(ring)(a, b)


def units(ring):
    _ring_type(ring)
    return _UNITS[ring]


def is_unit(x):
    return x in _UNITS[x.ring]


def unit_index(x):
    """Position of the unit ``x`` in :data:`EIS_UNITS` / :data:`GAUSS_UNITS`.
    For Z[w] an index j < 3 is ``w**j`` and j >= 3 is ``-w**(j-3)``;
    for Z[i] the index is the power of i.
    """
    try:
        return _UNITS[x.ring].index(x)
    except ValueError:
        raise DomainError("{} is not a unit".format(x))


# Arithmetic

def _add(x, y, counters):
    return type(x)(int_add(x.a, y.a, counters), int_add(x.b, y.b, counters))


def _sub(x, y, counters):
    return type(x)(int_sub(x.a, y.a, counters), int_sub(x.b, y.b, counters))


def _eis_mul(x, y, counters):
    # (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
    ac = int_mul(x.a, y.a, counters)
    bd = int_mul(x.b, y.b, counters)
    ad = int_mul(x.a, y.b, counters)
    bc = int_mul(x.b, y.a, counters)
    return EisensteinInt(
        int_sub(ac, bd, counters),
        int_sub(int_add(ad, bc, counters), bd, counters))


def _gauss_mul(x, y, counters):
    ac = int_mul(x.a, y.a, counters)
    bd = int_mul(x.b, y.b, counters)
    ad = int_mul(x.a, y.b, counters)
    bc = int_mul(x.b, y.a, counters)
    return GaussianInt(int_sub(ac, bd, counters), int_add(ad, bc, counters))


_MULTIPLY = {EIS: _eis_mul, GAUSS: _gauss_mul}
_OPERATIONS = ('add', 'sub', 'mul')


def ring_arith(x, y, op, counters=None):
    """Exact ``x op y`` for two elements of the same ring."""
    if x.ring != y.ring:
        raise ValueError("cannot combine {} and {} elements"
                         .format(x.ring, y.ring))
    if op == 'add':
        return _add(x, y, counters)
    elif op == 'sub':
        return _sub(x, y, counters)
    elif op == 'mul':
        return _MULTIPLY[x.ring](x, y, counters)
    raise ValueError("unknown operation '{}', expected one of {}"
                     .format(op, ', '.join(_OPERATIONS)))


def eis_arith(x, y, op, counters=None):
    if x.ring != EIS or y.ring != EIS:
        raise ValueError("eis_arith takes Eisenstein integers")
    return ring_arith(x, y, op, counters)


def gauss_arith(x, y, op, counters=None):
    if x.ring != GAUSS or y.ring != GAUSS:
        raise ValueError("gauss_arith takes Gaussian integers")
    return ring_arith(x, y, op, counters)


def ring_power(x, exponent, counters=None):
    if exponent < 0:
        raise ValueError("negative exponent {}".format(exponent))
    result = type(x)(1, 0)
    base = x
    while exponent:
        if exponent & 1:
            result = ring_arith(result, base, 'mul', counters)
        exponent >>= 1
        if exponent:
            base = ring_arith(base, base, 'mul', counters)
    return result


def eis_norm(x, counters=None, formula='standard'):
    """``N(a + bw) = a**2 - ab + b**2``.

    ``formula`` selects an equivalent evaluation: ``standard`` uses three
    products, ``shifted`` evaluates ``(a - b)**2 + ab`` and ``diagonal``
    evaluates ``((2a - b)**2 + 3 b**2) / 4``, both with two.
    """
    a, b = x.a, x.b
    if formula == 'standard':
        return int_add(
            int_sub(int_mul(a, a, counters), int_mul(a, b, counters),
                    counters),
            int_mul(b, b, counters), counters)
    elif formula == 'shifted':
        d = int_sub(a, b, counters)
        return int_add(int_mul(d, d, counters), int_mul(a, b, counters),
                       counters)
    elif formula == 'diagonal':
        d = int_sub(int_add(a, a, counters), b, counters)
        bb = int_mul(b, b, counters)
        three_bb = int_add(int_add(bb, bb, counters), bb, counters)
        return int_exact_div(
            int_add(int_mul(d, d, counters), three_bb, counters), 4,
            counters)
    raise ValueError("unknown norm formula '{}', expected one of {}"
                     .format(formula, ', '.join(NORM_FORMULAS)))


def eis_conj(x, counters=None):
    """``conj(a + bw) = (a - b) - bw``."""
    return EisensteinInt(int_sub(x.a, x.b, counters), -x.b)


def gauss_norm(x, counters=None):
    return int_add(int_mul(x.a, x.a, counters), int_mul(x.b, x.b, counters),
                   counters)


def gauss_conj(x, counters=None):
    return GaussianInt(x.a, -x.b)


def norm(x, counters=None, formula='standard'):
    if x.ring == EIS:
        return eis_norm(x, counters, formula)
    return gauss_norm(x, counters)


def conj(x, counters=None):
    if x.ring == EIS:
        return eis_conj(x, counters)
    return gauss_conj(x, counters)


def exact_divide(x, y, counters=None):
    """``x / y`` when ``y`` divides ``x`` exactly in the ring."""
    if y.is_zero:
        raise ZeroDivisionError("division by the zero {} element"
                                .format(y.ring))
    numerator = ring_arith(x, conj(y, counters), 'mul', counters)
    n = norm(y, counters)
    return type(x)(int_exact_div(numerator.a, n, counters),
                   int_exact_div(numerator.b, n, counters))


# Classification

@dataclass(frozen=True)
class EisClass(object):
    """Tag of an Eisenstein integer. ``residue`` is +1 or -1 (the class
    mod 3) for primary elements, including the units 1 and -1.
    """
    tag: str
    residue: Optional[int] = None

    @property
    def is_primary(self):
        return self.residue is not None


@dataclass(frozen=True)
class GaussClass(object):
    tag: str
    primary: bool = False

    @property
    def is_primary(self):
        return self.primary


def _eis_is_primary(x):
    return x.b % 3 == 0 and x.a % 3 != 0


def _gauss_is_primary(x):
    return x.b % 2 == 0 and (x.a + x.b) % 4 == 1


def is_primary(x):
    """Z[w]: x = +-1 mod 3. Z[i]: x = 1 mod (1+i)**3."""
    if x.ring == EIS:
        return _eis_is_primary(x)
    return _gauss_is_primary(x)


def is_two_primary(x):
    return x.ring == EIS and x.a % 3 == 2 and x.b % 3 == 0


def two_primary_associate(x):
    """The associate of a primary Eisenstein integer that is = 2 mod 3."""
    if not _eis_is_primary(x):
        raise DomainError("{} is not primary".format(x))
    return x if x.a % 3 == 2 else -x


def classify_eis(x):
    if x.is_zero:
        return EisClass(ZERO)
    if x in EIS_UNITS:
        residue = None
        if x.b == 0:
            residue = x.a
        return EisClass(UNIT, residue)
    if (x.a + x.b) % 3 == 0:
        return EisClass(RAMIFIED_DIVISIBLE)
    if x.b % 3 == 0:
        if x.a % 3 == 1:
            return EisClass(PRIMARY_PLUS, 1)
        return EisClass(PRIMARY_MINUS, -1)
    return EisClass(OTHER)


def classify_gauss(x):
    if x.is_zero:
        return GaussClass(ZERO)
    if x in GAUSS_UNITS:
        return GaussClass(UNIT, _gauss_is_primary(x))
    if (x.a + x.b) % 2 == 0:
        return GaussClass(EVEN_DIVISIBLE)
    if _gauss_is_primary(x):
        return GaussClass(PRIMARY, True)
    return GaussClass(OTHER)


# Normalization

def _record_removal(counters):
    if counters is not None:
        counters.ramified_removals += 1


def remove_ramified(g, counters=None):
    """Split ``g = (1 - w)**m * g'`` with ``g'`` prime to ``1 - w``.

    ``(e + fw) / (1 - w) = (2e - f)/3 + ((e + f)/3) w``, integral iff
    3 divides ``e + f``.
    """
    if g.is_zero:
        raise DomainError("cannot remove ramified factors from zero")
    e, f = g.a, g.b
    m = 0
    while True:
        s = int_add(e, f, counters)
        third, remainder = int_divmod(s, 3, counters)
        if remainder:
            break
        doubled = int_add(e, e, counters)
        e, f = int_exact_div(int_sub(doubled, f, counters), 3, counters), third
        m += 1
        _record_removal(counters)
    return m, EisensteinInt(e, f)


def _rotate_eis(x, counters):
    # multiply by w**2: e + fw -> (f - e) - ew
    return EisensteinInt(int_sub(x.b, x.a, counters), -x.a)


def unit_normalize_eis(g, counters=None):
    """Return ``(n, g'')`` with ``g = w**n * g''`` and ``g''`` primary."""
    if g.is_zero or (g.a + g.b) % 3 == 0:
        raise DomainError(
            "{} is zero or divisible by 1-w; no primary associate"
            .format(g))
    cycle = [g]
    for _ in range(2):
        cycle.append(_rotate_eis(cycle[-1], counters))
    hits = [n for n, candidate in enumerate(cycle)
            if _eis_is_primary(candidate)]
    if len(hits) != 1:
        raise IntegrityError(
            "expected exactly one primary associate of {}, found {}"
            .format(g, len(hits)))
    n = hits[0]
    return n, cycle[n]


def remove_even(g, counters=None):
    """Split ``g = (1 + i)**m * g'`` with ``g'`` odd.

    ``(e + fi) / (1 + i) = (e + f)/2 + ((f - e)/2) i``.
    """
    if g.is_zero:
        raise DomainError("cannot remove even factors from zero")
    e, f = g.a, g.b
    m = 0
    while (e + f) % 2 == 0:
        e, f = (int_add(e, f, counters) >> 1, int_sub(f, e, counters) >> 1)
        m += 1
        _record_removal(counters)
    return m, GaussianInt(e, f)


def _rotate_gauss(x, counters):
    # multiply by i**3 = -i: e + fi -> f - ei
    return GaussianInt(x.b, -x.a)


def unit_normalize_gauss(g, counters=None):
    """Return ``(n, g'')`` with ``g = i**n * g''`` and ``g''`` primary."""
    if g.is_zero or (g.a + g.b) % 2 == 0:
        raise DomainError("{} is zero or even; no primary associate"
                          .format(g))
    cycle = [g]
    for _ in range(3):
        cycle.append(_rotate_gauss(cycle[-1], counters))
    hits = [n for n, candidate in enumerate(cycle)
            if _gauss_is_primary(candidate)]
    if len(hits) != 1:
        raise IntegrityError(
            "expected exactly one primary associate of {}, found {}"
            .format(g, len(hits)))
    n = hits[0]
    return n, cycle[n]


# Text form: <int> | <int>? ('+'|'-') <uint>? letter

_DIGITS = '0123456789'


def _scan_digits(text, position):
    start = position
    while position < len(text) and text[position] in _DIGITS:
        position += 1
    return text[start:position], position


def parse_ring_element(text, ring=EIS):
    """Parse ``text`` in the ring grammar. ``w`` stands for the cube root
    of unity, ``i`` for the imaginary unit.

    :raises RingParseError: with the offending position
    """
    cls = _ring_type(ring)
    letter = BASIS_LETTERS[ring]
    length = len(text)
    if not length:
        raise RingParseError(text, 0, 'empty input')

    position = 0
    sign = 1
    if text[0] in '+-':
        sign = -1 if text[0] == '-' else 1
        position = 1
    digits, position = _scan_digits(text, position)

    if position == length:
        if not digits:
            raise RingParseError(text, position, 'expected digits')
        return cls(sign * int(digits), 0)

    if text[position] == letter:
        if position + 1 != length:
            raise RingParseError(text, position + 1,
                                 'unexpected trailing text')
        return cls(0, sign * (int(digits) if digits else 1))

    if text[position] in '+-':
        if not digits:
            raise RingParseError(text, position, 'expected digits')
        a = sign * int(digits)
        b_sign = -1 if text[position] == '-' else 1
        b_digits, position = _scan_digits(text, position + 1)
        if position == length or text[position] != letter:
            raise RingParseError(text, position,
                                 "expected '{}'".format(letter))
        if position + 1 != length:
            raise RingParseError(text, position + 1,
                                 'unexpected trailing text')
        return cls(a, b_sign * (int(b_digits) if b_digits else 1))

    raise RingParseError(text, position,
                         'unexpected character {!r}'.format(text[position]))


def format_ring_element(x):
    """Canonical text: ``a`` then signed ``b`` with the basis letter,
    zero parts and unit coefficients omitted; zero prints ``0``.
    """
    letter = BASIS_LETTERS[x.ring]
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    coefficient = '' if abs(b) == 1 else str(abs(b))
    if a == 0:
        return '{}{}{}'.format('-' if b < 0 else '', coefficient, letter)
    return '{}{}{}{}'.format(a, '-' if b < 0 else '+', coefficient, letter)
