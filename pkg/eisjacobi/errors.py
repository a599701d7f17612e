# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Exceptions raised by the library and mapped to exit codes by the CLI"""


__all__ = (
    'RingParseError', 'DomainError', 'ContractError', 'OracleRefusal',
    'FitError', 'IntegrityError', 'StepCapExceeded',
    )


class RingParseError(ValueError):
    """Malformed ring element text. ``position`` is the offset of the
    first character that does not fit the grammar.
    """

    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super(RingParseError, self).__init__(
            "cannot parse '{}' at position {}: {}"
            .format(text, position, reason))


class DomainError(ValueError):
    """A number-theoretic precondition does not hold."""


class ContractError(DomainError):
    """A symbol algorithm was called outside its contract,
    e.g. with a non-primary lower argument.
    """


class OracleRefusal(DomainError):
    """The factoring oracle refuses norms beyond its bound."""


class FitError(ValueError):
    """Degenerate input to a log-log fit."""


class IntegrityError(ArithmeticError):
    """An exact identity that must hold did not."""


class StepCapExceeded(RuntimeError):

    def __init__(self, cap, trace):
        self.cap = cap
        self.trace = trace
        super(StepCapExceeded, self).__init__(
            "step cap of {} divisions exceeded".format(cap))
