# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from .costmodel import CostCounters
from .errors import IntegrityError
from .rings import (
    EIS, GAUSS, EIS_UNITS, GAUSS_UNITS, EisensteinInt, GaussianInt, bitlen,
    format_ring_element, norm,
    )


__all__ = (
    'CubicSymbol', 'QuarticSymbol', 'SYMBOL_TYPES',
    'StepRecord', 'RunTrace', 'DivisionOutcome', 'DyadicComplex',
    'NormEquationSolution', 'TwoSquares', 'BenchRecord', 'BENCH_FIELDS',
    'RecurrenceSpec',
    )


@dataclass(frozen=True)
class _PowerSymbol(object):
    """A root of unity ``basis**exponent`` or zero (``exponent`` is None)."""
    exponent: Optional[int] = 0

    order = None
    letter = None

    def __post_init__(self):
        if self.exponent is not None:
            object.__setattr__(self, 'exponent', self.exponent % self.order)

    @classmethod
    def zero(cls):
        return cls(None)

    @property
    def is_zero(self):
        return self.exponent is None

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.zero()
        return type(self)(self.exponent + other.exponent)

    def __pow__(self, k):
        if self.is_zero:
            return self.zero() if k else type(self)(0)
        return type(self)(self.exponent * k)

    def __str__(self):
        if self.is_zero:
            return '0'
        return '{}^{}'.format(self.letter, self.exponent)


@dataclass(frozen=True)
class CubicSymbol(_PowerSymbol):
    """Value of a cubic residue symbol: 0 or ``w**k`` with k in {0, 1, 2}."""

    order = 3
    letter = 'w'

    @property
    def value(self):
        if self.is_zero:
            return EisensteinInt(0, 0)
        return EIS_UNITS[self.exponent]


@dataclass(frozen=True)
class QuarticSymbol(_PowerSymbol):
    """Value of a quartic residue symbol: 0 or ``i**k`` with k in 0..3."""

    order = 4
    letter = 'i'

    @property
    def value(self):
        if self.is_zero:
            return GaussianInt(0, 0)
        return GAUSS_UNITS[self.exponent]


SYMBOL_TYPES = {EIS: CubicSymbol, GAUSS: QuarticSymbol}


@dataclass(frozen=True)
class StepRecord(object):
    """One division of the symbol recursion.

    ``q`` is the quotient, ``m`` the number of ramified factors removed
    from the remainder and ``n`` the unit power taken off to make it
    primary.
    """
    q: Any
    m: int
    n: int
    bitlen_alpha: int
    bitlen_beta: int
    bitlen_q: int

    def __str__(self):
        return 'q={} m={} n={} bits={}/{}/{}'.format(
            format_ring_element(self.q), self.m, self.n,
            self.bitlen_alpha, self.bitlen_beta, self.bitlen_q)


@dataclass
class RunTrace(object):
    """Record of one symbol computation.

    ``iterations`` counts invocations of the recursion, including the
    last one that stops at a base case; ``steps`` holds divisions only.
    """
    steps: List[StepRecord] = field(default_factory=list)
    gcd: Any = None
    counters: CostCounters = field(default_factory=CostCounters)
    iterations: int = 0

    def __len__(self):
        return len(self.steps)

    @property
    def quotients(self):
        return [step.q for step in self.steps]


@dataclass(frozen=True)
class DivisionOutcome(object):
    """``dividend = q * divisor + r``."""
    q: Any
    r: Any
    divisor: Any

    @property
    def shrink(self):
        """Achieved ``N(r) / N(divisor)`` as an exact fraction."""
        return Fraction(norm(self.r), norm(self.divisor))


@dataclass(frozen=True)
class DyadicComplex(object):
    """``(u + v*basis) / 2**exp`` in Z[w] or Z[i] coordinates."""
    u: int
    v: int
    exp: int
    ring: str = EIS

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("negative exponent {}".format(self.exp))

    @property
    def coordinates(self):
        scale = 1 << self.exp
        return Fraction(self.u, scale), Fraction(self.v, scale)

    @property
    def bits(self):
        return max(bitlen(self.u), bitlen(self.v))

    def norm(self):
        """Exact norm as a fraction."""
        x, y = self.coordinates
        if self.ring == EIS:
            return x * x - x * y + y * y
        return x * x + y * y


@dataclass(frozen=True)
class NormEquationSolution(object):
    """``p = s**2 + 3 t**2 = x**2 - x y + y**2`` with ``x = s + t``,
    ``y = 2 t``; ``pi`` is the primary associate of ``x + y w``.
    """
    p: int
    s: int
    t: int
    x: int
    y: int
    pi: Any = None

    def __post_init__(self):
        if self.s * self.s + 3 * self.t * self.t != self.p:
            raise IntegrityError("{}^2 + 3*{}^2 != {}"
                                 .format(self.s, self.t, self.p))
        if self.x != self.s + self.t or self.y != 2 * self.t:
            raise IntegrityError("x, y do not match s, t")
        if self.x * self.x - self.x * self.y + self.y * self.y != self.p:
            raise IntegrityError("x^2 - xy + y^2 != {}".format(self.p))


@dataclass(frozen=True)
class TwoSquares(object):
    """``p = x**2 + y**2`` with ``0 < x < y``."""
    p: int
    x: int
    y: int

    def __post_init__(self):
        if self.x * self.x + self.y * self.y != self.p:
            raise IntegrityError("{}^2 + {}^2 != {}"
                                 .format(self.x, self.y, self.p))


@dataclass(frozen=True)
class BenchRecord(object):
    family: str
    n: int
    input_bits: int
    backend: str
    div_steps: int
    ramified_removals: int
    mul_cost: int
    remainder_volume: int
    add_cost: int = 0
    model_cost: int = 0
    iterations: int = 0
    cap_exceeded: bool = False

    def as_dict(self):
        return asdict(self)

    @property
    def sort_key(self):
        return (self.family, self.n, self.backend)


BENCH_FIELDS = tuple(f.name for f in fields(BenchRecord))


@dataclass(frozen=True)
class RecurrenceSpec(object):
    """``x_n = coefficient * x_{n-1} + x_{n-2}``.

    The root values are decimal approximations for reporting; nothing
    exact is computed from them.
    """
    ring: str
    coefficient: Any
    seeds: Tuple[Any, Any]
    dominant_root: str
    dominant_root_modulus: str
    minor_root_modulus: str

    def __post_init__(self):
        if self.ring not in (EIS, GAUSS):
            raise ValueError("unknown ring '{}'".format(self.ring))
