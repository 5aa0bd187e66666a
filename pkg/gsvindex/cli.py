#!/usr/bin/env python3
# File name   : cli.py
# Description : gsvindex command line: index, residue, oracle and check
# Author      : gsvindex developers
# Date        : 2026/10/16
"""
Usage:
    gsvindex index  FILE [--json]
    gsvindex residue FILE                       residue-route numerator of FILE
    gsvindex residue --vars "x y" --numerator "(x+y)^2" --denominators "x^2, y^2"
    gsvindex oracle FILE
    gsvindex check  FILE

--family dk:K,M | ak:MU | quadric:N replaces FILE.

Exit status: 0 success, 1 errors, 2 disagreeing routes or oracle mismatch,
3 oracle truncation did not stabilize.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import families
from .config import EngineConfig, ORACLE_MAX_N, TRUNC_CAP, TRUNC_START
from .errors import (ConfigError, GsvError, NoStabilization, NonPolynomialFactor,
                     OracleRefused)
from .complex_oracle import stabilized_homology
from .index_core import Invariants, compute_c, full_report
from .local_engine import normalize_coordinates, regular_sequence_check
from .parser import (format_polynomial, format_problem, format_rational, parse_polynomial,
                     parse_problem, split_names)
from .residue import grothendieck_residue

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_UNSTABLE = 3


@dataclass
class CliConfig:
    subcommand: str
    path: str = None
    trunc_start: int = TRUNC_START
    trunc_cap: int = TRUNC_CAP
    seed: int = 0
    json: bool = False
    max_oracle_n: int = ORACLE_MAX_N
    family: str = None
    numerator: str = None
    denominators: str = None
    vars: str = None
    verbose: int = 0

    def validate(self):
        if self.trunc_start < 2:
            raise ConfigError('--trunc-start must be at least 2')
        if self.trunc_cap < self.trunc_start:
            raise ConfigError('--trunc-cap must not be below --trunc-start')

    def engine(self):
        return EngineConfig(trunc_start=self.trunc_start, trunc_cap=self.trunc_cap,
                            oracle_max_n=self.max_oracle_n)


def build_parser():
    parser = argparse.ArgumentParser(prog='gsvindex',
                                     description='GSV index of a vector field tangent to a '
                                                 'hypersurface singularity')
    parser.add_argument('subcommand', choices=['index', 'residue', 'oracle', 'check'])
    parser.add_argument('path', nargs='?', help='problem file (vars:, f:, X:, optional c:)')
    parser.add_argument('--family', help='built-in problem: dk:K,M, ak:MU or quadric:N')
    parser.add_argument('--trunc-start', type=int, default=TRUNC_START,
                        help='lowest truncation order (default %(default)s)')
    parser.add_argument('--trunc-cap', type=int, default=TRUNC_CAP,
                        help='highest truncation order (default %(default)s)')
    parser.add_argument('--seed', type=int, default=0, help='seed for coordinate changes')
    parser.add_argument('--json', action='store_true', help='print a JSON document')
    parser.add_argument('--max-oracle-n', type=int, default=ORACLE_MAX_N,
                        help='largest variable count the oracle accepts (default %(default)s)')
    parser.add_argument('--numerator', help='residue numerator h')
    parser.add_argument('--denominators', help='comma separated regular sequence g_1..g_n')
    parser.add_argument('--vars', help='variable names for --numerator/--denominators')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress, -vv for truncation detail')
    return parser


def parse_args(argv=None):
    args = build_parser().parse_args(argv)
    return CliConfig(args.subcommand, args.path, args.trunc_start, args.trunc_cap, args.seed,
                     args.json, args.max_oracle_n, args.family, args.numerator,
                     args.denominators, args.vars, args.verbose)


def load_problem(config):
    if config.family:
        return families.from_text(config.family)
    if not config.path:
        raise ConfigError('a problem FILE or --family is required')
    with open(config.path, encoding='utf-8') as handle:
        return parse_problem(handle.read())


def _fmt(value):
    return 'n/a' if value is None else str(value)


def _print_report(report):
    spec = report.spec
    print('problem: f = %s; X = (%s)' % (format_polynomial(spec.f),
                                        ', '.join(format_polynomial(x) for x in spec.X)))
    if report.c is not None:
        suffix = '' if report.c_exact else ' (truncated series)'
        print('c: %s%s' % (format_polynomial(report.c), suffix))
    if report.dims is not None:
        print('h*: %s' % ' '.join(str(v) for v in report.dims.h_star))
        print('h: %s' % ' '.join(str(v) for v in report.dims.h))
        print('lambda: %d   milnor: %d' % (report.dims.lam, report.dims.milnor))
    indices = report.indices()
    print('index routes: homological %s, residue %s, gomez-mont %s, poincare-hopf %s'
          % tuple(_fmt(indices[k]) for k in ('homological', 'residue', 'gomez_mont',
                                             'poincare_hopf')))
    for note in report.diagnostics:
        print('note: %s' % note)
    if report.index is not None:
        status = 'consistent' if report.consistent else 'INCONSISTENT'
        if report.failed_routes:
            status += '; failed: %s' % ', '.join(report.failed_routes)
        print('index: %d (%s)' % (report.index, status))


def run_index(config):
    spec = load_problem(config)
    report = full_report(spec, config.seed, config.engine())
    if config.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        _print_report(report)
    if report.index is None:
        return EXIT_ERROR
    if not report.consistent:
        return EXIT_MISMATCH
    return EXIT_ERROR if report.failed_routes else EXIT_OK


def run_residue(config):
    engine = config.engine()
    if config.numerator is not None or config.denominators is not None:
        if config.numerator is None or config.denominators is None:
            raise ConfigError('--numerator and --denominators go together')
        if config.vars:
            names = split_names(config.vars)
        elif config.path or config.family:
            names = list(load_problem(config).vars)
        else:
            raise ConfigError('--vars is required without a problem FILE')
        h = parse_polynomial(config.numerator, names)
        gens = [parse_polynomial(g, names) for g in config.denominators.split(',')]
    else:
        spec = normalize_coordinates(load_problem(config), config.seed, engine)
        try:
            inv = Invariants(spec, engine, compute_c(spec.f, spec.X, engine.trunc_cap))
        except NonPolynomialFactor as err:
            log.warning('using truncated tangency factor %s', format_polynomial(err.c))
            inv = Invariants(spec, engine, err.c, c_exact=False)
        h = inv.residue_numerator()
        gens = list(spec.X[:-1]) + [spec.f]
        log.info('numerator %s over (%s)', format_polynomial(h),
                 ', '.join(format_polynomial(g) for g in gens))
    print(format_rational(grothendieck_residue(h, gens, engine)))
    return EXIT_OK


def run_oracle(config):
    engine = config.engine()
    spec = load_problem(config)
    if spec.n > engine.oracle_max_n:
        raise OracleRefused('oracle handles at most %d variables, problem has %d'
                            % (engine.oracle_max_n, spec.n))
    report = full_report(spec, config.seed, engine)
    if report.dims is None:
        for note in report.diagnostics:
            print('note: %s' % note)
        return EXIT_ERROR
    try:
        result = stabilized_homology(report.spec, engine)
    except NoStabilization as err:
        print('oracle: no stabilization over orders %s' % (err.orders or 'none'))
        return EXIT_UNSTABLE
    rows = [('h_%d*' % i, a, b) for i, (a, b) in enumerate(zip(report.dims.h_star, result.h_star))]
    rows += [('h_%d' % i, a, b) for i, (a, b) in enumerate(zip(report.dims.h, result.h))]
    rows.append(('chi', report.index, result.chi))
    print('%-6s %8s %8s' % ('', 'formula', 'oracle'))
    for name, a, b in rows:
        print('%-6s %8s %8s%s' % (name, _fmt(a), b, '' if a == b else '   <--'))
    print('orders: %s; peak rss: %.1f MB' % (', '.join(str(o) for o in result.orders),
                                             result.peak_rss))
    return EXIT_OK if all(a == b for _, a, b in rows) else EXIT_MISMATCH


def _yes(flag):
    return 'yes' if flag else 'no'


def run_check(config):
    engine = config.engine()
    spec = load_problem(config)
    n = spec.n
    try:
        c = format_polynomial(compute_c(spec.f, spec.X, engine.trunc_cap))
    except NonPolynomialFactor as err:
        c = '%s + ... (power series)' % format_polynomial(err.c)
    first = regular_sequence_check(list(spec.X[:-1]) + [spec.f], engine)
    whole = regular_sequence_check(spec.X, engine)
    lead = ','.join('X%d' % (i + 1) for i in range(n - 1))
    parts = ['tangent: c = %s' % c,
             '(%s,f) regular: %s' % (lead, _yes(first)),
             '(%s,X%d) regular: %s' % (lead, n, _yes(whole))]
    if not first:
        moved = normalize_coordinates(spec, config.seed, engine)
        parts.append('coordinate change: %s'
                     % [[format_rational(v) for v in row] for row in moved.coordinate_change])
    print('; '.join(parts))
    if not first:
        print('# problem in the new coordinates')
        print(format_problem(moved), end='')
    return EXIT_OK


COMMANDS = {'index': run_index, 'residue': run_residue, 'oracle': run_oracle,
            'check': run_check}


def main(argv=None):
    config = parse_args(argv)
    level = logging.WARNING if not config.verbose else (
        logging.INFO if config.verbose == 1 else logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    try:
        config.validate()
        return COMMANDS[config.subcommand](config)
    except NoStabilization as err:
        print('error: NoStabilization: %s' % err, file=sys.stderr)
        return EXIT_UNSTABLE if config.subcommand == 'oracle' else EXIT_ERROR
    except GsvError as err:
        print('error: %s: %s' % (type(err).__name__, err), file=sys.stderr)
        return EXIT_ERROR
    except OSError as err:
        print('error: %s' % err, file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
