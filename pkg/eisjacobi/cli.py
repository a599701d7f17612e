# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
"""The ``eis-jacobi`` command.

Exit codes: 0 success, 2 parse or usage error, 3 domain or contract
violation, 4 verification or integrity failure, 5 step cap exceeded.
"""
import argparse
import logging
import re
import sys

from .costmodel import CostCounters
from .division import BACKENDS, GUARD_BITS
from .errors import (
    DomainError, FitError, IntegrityError, OracleRefusal, RingParseError,
    StepCapExceeded,
    )
from .formatters import (
    BenchFormatter, SymbolFormatter, TableFormatter, VerifyFormatter,
    format_norm_solution, format_pair, format_residue_answers,
    )
from .residue import (
    ORACLE_NORM_LIMIT, STRATEGIES, TABLE_KINDS, TABLE_METHODS,
    norm_equation_eis, partition_table, residue_test_batch, solve_x2_y2,
    )
from .rings import EIS, GAUSS, NORM_FORMULAS, parse_ring_element
from .symbols import ALGORITHMS, DEFAULT_STEP_CAP, jacobi_symbol
from .adversary import family_pair
from .verification import (
    BENCH_FAMILIES, DEFAULT_SAMPLES, DEFAULT_SEED, EVEN_FAMILIES, SUITES,
    bench_fits, run_bench, run_suite,
    )


__all__ = ('main', 'make_parser', 'EXIT_OK', 'EXIT_USAGE', 'EXIT_DOMAIN',
           'EXIT_VERIFY', 'EXIT_CAP')

logger = logging.getLogger('eisjacobi')

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4
EXIT_CAP = 5

# First match wins; RingParseError and FitError are ValueErrors.
_EXIT_CODES = (
    (RingParseError, EXIT_USAGE),
    (IntegrityError, EXIT_VERIFY),
    (DomainError, EXIT_DOMAIN),
    (FitError, EXIT_DOMAIN),
    (ZeroDivisionError, EXIT_DOMAIN),
    (ValueError, EXIT_USAGE),
    )

# "-2-3w", "-w" and "-i+1" are operands, not options.
_RING_OPERAND = re.compile(r'^-(\d|[wi]($|[+-]))')


class RingArgumentParser(argparse.ArgumentParser):
    """Treats negative ring elements as positional arguments."""

    def _parse_optional(self, arg_string):
        if _RING_OPERAND.match(arg_string):
            return None
        return super(RingArgumentParser, self)._parse_optional(arg_string)


def _int_list(text):
    try:
        values = [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma separated integers, got '{}'".format(text))
    if not values:
        raise argparse.ArgumentTypeError("no sizes given")
    return values


def _backend_list(text):
    backends = [item.strip() for item in text.split(',') if item.strip()]
    unknown = [item for item in backends if item not in BACKENDS]
    if unknown or not backends:
        raise argparse.ArgumentTypeError(
            "unknown backend in '{}', expected {}"
            .format(text, ' or '.join(sorted(BACKENDS))))
    return backends


# Commands

def cmd_symbol(args, out):
    alpha = parse_ring_element(args.alpha, args.ring)
    beta = parse_ring_element(args.beta, args.ring)
    symbol, trace = jacobi_symbol(
        alpha, beta, ring=args.ring, alg=args.alg, backend=args.backend,
        counters=CostCounters(), step_cap=args.cap,
        guard_bits=args.guard_bits)
    out.write(str(SymbolFormatter(symbol, trace if args.trace else None)))
    return EXIT_OK


def cmd_residue(args, out):
    answers = residue_test_batch(args.p, args.values, args.power,
                                 args.strategy)
    out.write(format_residue_answers(args.values, answers))
    return EXIT_OK


def cmd_normeq(args, out):
    if args.kind == EIS:
        solution = norm_equation_eis(args.p)
    else:
        solution = solve_x2_y2(args.p)
    out.write(format_norm_solution(solution))
    return EXIT_OK


def cmd_table(args, out):
    rows = list(partition_table(args.max, args.kind, args.method))
    out.write(str(TableFormatter(rows, args.kind, args.header)))
    return EXIT_OK


def cmd_adversary(args, out):
    out.write(format_pair(*family_pair(args.family, args.n)))
    return EXIT_OK


def cmd_bench(args, out):
    records = run_bench(args.family, args.sizes, args.backend,
                        norm_formula=args.norm_formula, step_cap=args.cap,
                        guard_bits=args.guard_bits)
    fits = bench_fits(records) if args.fit else ()
    out.write(str(BenchFormatter(records, args.format, fits, args.header)))
    if any(record.cap_exceeded for record in records):
        return EXIT_CAP
    return EXIT_OK


def cmd_verify(args, out):
    if args.max_norm > ORACLE_NORM_LIMIT:
        raise OracleRefusal("--max-norm {} is above the oracle bound {}"
                            .format(args.max_norm, ORACLE_NORM_LIMIT))
    report = run_suite(args.suite, args.max_norm, seed=args.seed,
                       samples=args.samples)
    out.write(str(VerifyFormatter(report)))
    return EXIT_OK if report.passed else EXIT_VERIFY


def make_parser():
    parser = RingArgumentParser(
        prog='eis-jacobi',
        description="Cubic and quartic Jacobi symbols in Z[w] and Z[i].")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="log progress to stderr (-vv for every step)")
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    symbol = commands.add_parser('symbol', help="compute (ALPHA / BETA)")
    symbol.add_argument('--ring', choices=(EIS, GAUSS), default=EIS)
    symbol.add_argument('--alg', choices=ALGORITHMS, default='wh')
    symbol.add_argument('--backend', choices=sorted(BACKENDS),
                        default='exact')
    symbol.add_argument('--trace', action='store_true',
                        help="print the division steps and costs")
    symbol.add_argument('--cap', type=int, default=DEFAULT_STEP_CAP,
                        help="step cap for the even-quotient algorithm")
    symbol.add_argument('--guard-bits', type=int, default=GUARD_BITS)
    symbol.add_argument('alpha')
    symbol.add_argument('beta')
    symbol.set_defaults(handler=cmd_symbol)

    residue = commands.add_parser(
        'residue', help="test whether A is a cube or fourth power mod P")
    residue.add_argument('--power', type=int, choices=(3, 4), default=3)
    residue.add_argument('--strategy', choices=STRATEGIES, default='auto')
    residue.add_argument('p', type=int, metavar='P')
    residue.add_argument('values', type=int, nargs='+', metavar='A')
    residue.set_defaults(handler=cmd_residue)

    normeq = commands.add_parser(
        'normeq', help="solve P = s^2 + 3t^2 or P = x^2 + y^2")
    normeq.add_argument('--kind', choices=(EIS, GAUSS), default=EIS)
    normeq.add_argument('p', type=int, metavar='P')
    normeq.set_defaults(handler=cmd_normeq)

    table = commands.add_parser('table', help="tabulate norm equations")
    table.add_argument('--kind', choices=TABLE_KINDS, default='s2_3t2')
    table.add_argument('--max', type=int, required=True)
    table.add_argument('--header', action='store_true')
    table.add_argument('--method', choices=TABLE_METHODS, default='descent')
    table.set_defaults(handler=cmd_table)

    adversary = commands.add_parser(
        'adversary', help="print a worst-case input pair")
    adversary.add_argument('--family', choices=BENCH_FAMILIES,
                           required=True)
    adversary.add_argument('n', type=int, metavar='N')
    adversary.set_defaults(handler=cmd_adversary)

    bench = commands.add_parser(
        'bench', help="run a family through the cost model")
    bench.add_argument('--family', choices=BENCH_FAMILIES, required=True)
    bench.add_argument('--sizes', type=_int_list, required=True)
    bench.add_argument('--backend', type=_backend_list, default=['exact'],
                       help="exact, newton or both separated by a comma")
    bench.add_argument('--format', choices=('csv', 'json'), default='csv')
    bench.add_argument('--header', action='store_true')
    bench.add_argument('--fit', action='store_true',
                       help="append fitted cost exponents")
    bench.add_argument('--norm-formula', choices=NORM_FORMULAS,
                       default='standard')
    bench.add_argument('--cap', type=int, default=DEFAULT_STEP_CAP)
    bench.add_argument('--guard-bits', type=int, default=GUARD_BITS)
    bench.set_defaults(handler=cmd_bench)

    verify = commands.add_parser('verify', help="run a verification suite")
    verify.add_argument('--suite', choices=SUITES, required=True)
    verify.add_argument('--max-norm', type=int, default=2000)
    verify.add_argument('--seed', type=int, default=DEFAULT_SEED)
    verify.add_argument('--samples', type=int, default=DEFAULT_SAMPLES)
    verify.set_defaults(handler=cmd_verify)

    return parser


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                      logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def _exit_code(exc):
    for exc_type, code in _EXIT_CODES:
        if isinstance(exc, exc_type):
            return code
    raise exc


def _usage_problem(args):
    if args.command == 'bench' and args.family in EVEN_FAMILIES \
            and args.backend != ['exact']:
        return "family {} runs with the exact backend only".format(
            args.family)
    if args.command == 'symbol' and args.alg == 'even' \
            and args.backend != 'exact':
        return "the even-quotient algorithm has no {} backend".format(
            args.backend)
    return None


def main(argv=None, out=None):
    """Run the command line; returns the exit code."""
    parser = make_parser()
    out = sys.stdout if out is None else out
    try:
        args = parser.parse_args(argv)
        problem = _usage_problem(args)
        if problem:
            parser.error(problem)
    except SystemExit as exc:
        return exc.code
    _configure_logging(args.verbose)
    logger.debug("command {}: {}".format(args.command, vars(args)))

    try:
        return args.handler(args, out)
    except StepCapExceeded as exc:
        sys.stderr.write('eis-jacobi: {}\n'.format(exc))
        return EXIT_CAP
    except (ValueError, ArithmeticError) as exc:
        code = _exit_code(exc)
        sys.stderr.write('eis-jacobi: {}\n'.format(exc))
        return code


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
