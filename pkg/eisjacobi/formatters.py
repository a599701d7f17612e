# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""Text renderings of results, written to stdout by the CLI.

All output is LF-terminated ASCII.
"""
import csv
import io
import json

from .models import BENCH_FIELDS
from .rings import format_ring_element
from .templates.report_templates import (
    TABLE_TEMPLATE, TRACE_TEMPLATE, VERIFY_TEMPLATE,
    )


__all__ = (
    'TABLE_COLUMNS',
    'SymbolFormatter',
    'TableFormatter',
    'BenchFormatter',
    'VerifyFormatter',
    'format_pair',
    'format_residue_answers',
    'format_norm_solution',
    )

TABLE_COLUMNS = {
    's2_3t2': ('p', 's', 't'),
    'x2_y2': ('p', 'x', 'y'),
    }


class SymbolFormatter(object):
    """Symbol value, followed by the step records when a trace is given."""

    def __init__(self, symbol, trace=None):
        self.symbol = symbol
        self.trace = trace

    def __str__(self):
        text = '{}\n'.format(self.symbol)
        if self.trace is None:
            return text
        gcd = self.trace.gcd
        return text + TRACE_TEMPLATE.render(
            trace=self.trace,
            counters=self.trace.counters,
            gcd='-' if gcd is None else format_ring_element(gcd))


class TableFormatter(object):

    def __init__(self, rows, kind='s2_3t2', header=False):
        self.rows = rows
        self.columns = TABLE_COLUMNS[kind]
        self.header = header

    def __str__(self):
        return TABLE_TEMPLATE.render(rows=self.rows, columns=self.columns,
                                     header=self.header)


class BenchFormatter(object):
    """Bench records as CSV or as a JSON array of flat records.

    Fitted exponents follow the records: ``# fit NAME EXPONENT`` comment
    lines in CSV, ``{"fit": NAME, "exponent": EXPONENT}`` objects in JSON.
    """

    def __init__(self, records, format='csv', fits=(), header=False):
        if format not in ('csv', 'json'):
            raise ValueError("unknown format '{}'".format(format))
        self.records = records
        self.format = format
        self.fits = list(fits)
        self.header = header

    def _csv(self):
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=BENCH_FIELDS,
                                lineterminator='\n')
        if self.header:
            writer.writeheader()
        for record in self.records:
            writer.writerow(record.as_dict())
        for name, exponent in self.fits:
            buffer.write('# fit {} {:.4f}\n'.format(name, exponent))
        return buffer.getvalue()

    def _json(self):
        items = [record.as_dict() for record in self.records]
        items.extend({'fit': name, 'exponent': round(exponent, 4)}
                     for name, exponent in self.fits)
        return json.dumps(items, indent=2) + '\n'

    def __str__(self):
        if self.format == 'csv':
            return self._csv()
        return self._json()


class VerifyFormatter(object):

    def __init__(self, report):
        self.report = report

    def __str__(self):
        return VERIFY_TEMPLATE.render(report=self.report)


def format_pair(alpha, beta):
    return '{} {}\n'.format(format_ring_element(alpha),
                            format_ring_element(beta))


def format_residue_answers(values, answers):
    """One ``A yes|no`` line per value."""
    return ''.join('{} {}\n'.format(a, 'yes' if answer else 'no')
                   for a, answer in zip(values, answers))


def format_norm_solution(solution):
    """``p s t x y`` for s^2 + 3t^2, ``p x y`` for x^2 + y^2."""
    if hasattr(solution, 's'):
        fields = (solution.p, solution.s, solution.t, solution.x, solution.y)
    else:
        fields = (solution.p, solution.x, solution.y)
    return ' '.join(str(value) for value in fields) + '\n'
