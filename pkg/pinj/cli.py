# pinj
# SPDX-License-Identifier: MIT
"""Command-line front end.

    python -m pinj decompose --n 10 --chart "(1,7,2,4)[3,5,10][9,6][8]"
    python -m pinj count --n 3 --field card_is
    python -m pinj verify --n 5 --all

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""
import argparse
import logging
import sys
from typing import Callable, Iterable, List, Optional

import attr
import numpy as np

from pinj import config
from pinj.asymptotics import growth_report, mod_distribution, mod_trend, unimodality_report
from pinj.bijections import BIJECTIONS, sweep
from pinj.checks import CheckReport
from pinj.counting import FIELDS, count_table
from pinj.element import PartialInjection, chart_decomposition, compose, power, profile
from pinj.errors import PinjError, RankConstancyError
from pinj.identities import IDENTITY_NAMES, verify_identities
from pinj.products import (brute_force_distribution, cross_checks, rank_distribution,
                           spectral_distribution, verify_spectral_identities)
from pinj.reader import parse_chart, read_element_json, read_pairs_json
from pinj.sampler import SEED_LIMIT, monte_carlo
from pinj.writer import Writer, csv_val

logger = logging.getLogger('pinj')

FORMATS = ('json', 'csv', 'text')


@attr.define
class Outcome:
    """What a subcommand produced, in each output format."""

    payload: object
    rows: Callable[[], Iterable[dict]]
    lines: Callable[[], Iterable[str]]
    # None when the subcommand checks nothing.
    passed: Optional[bool] = None


class UsageError(Exception):
    pass


def _rows_of(report: CheckReport):
    return lambda: report.rows()


def _element_summary(a: PartialInjection) -> dict:
    chart = chart_decomposition(a)
    summary = {'n': a.n, 'map': list(a.table), 'chart': str(chart)}
    summary.update(attr.asdict(profile(a), recurse=False))
    summary['cycles'] = [list(c) for c in chart.cycles]
    summary['chains'] = [list(c) for c in chart.chains]
    return summary


def _flat(summary):
    row = {key: value for key, value in summary.items() if key != 'chain_type'}
    row.update(attr.asdict(summary['chain_type']))
    return row


def _summary_outcome(a: PartialInjection) -> Outcome:
    summary = _element_summary(a)
    return Outcome(summary,
                   lambda: [_flat(summary)],
                   lambda: (f'{key}:\t{csv_val(value)}' for key, value in _flat(summary).items()))


def _elements(args) -> List[PartialInjection]:
    elements = []
    for text in args.element or []:
        elements.append(read_element_json(text))
    if (args.chart or args.pairs) and args.n is None:
        raise UsageError('--n is required with --chart and --pairs')
    for text in args.chart or []:
        elements.append(parse_chart(text, args.n))
    for text in args.pairs or []:
        elements.append(read_pairs_json(args.n, text))
    return elements


def do_decompose(args, settings) -> Outcome:
    elements = _elements(args)
    if len(elements) != 1:
        raise UsageError('decompose takes exactly one of --chart, --pairs or --element')
    return _summary_outcome(elements[0])


def do_compose(args, settings) -> Outcome:
    elements = _elements(args)
    if not elements:
        raise UsageError('compose needs at least one element')
    product = elements[0]
    for a in elements[1:]:
        product = compose(product, a)
    if args.power is not None:
        product = power(product, args.power)
    return _summary_outcome(product)


def do_count(args, settings) -> Outcome:
    table = count_table(args.n)
    if args.field is not None:
        value = table.field(args.field)
        return Outcome(value,
                       lambda: [{'n': args.n, args.field: value}],
                       lambda: [csv_val(value)])
    return Outcome(table,
                   lambda: ({'field': f, 'value': table.field(f)} for f in FIELDS),
                   lambda: (f'{f}:\t{csv_val(table.field(f))}' for f in FIELDS))


def do_verify(args, settings) -> Outcome:
    names = None if args.all or not args.identity else args.identity
    report = verify_identities(args.n, names, budget=settings.enumeration_budget)
    if args.spectral:
        report.extend(verify_spectral_identities(args.n))
    return Outcome(report, _rows_of(report), report.lines, report.passed)


def do_bijection(args, settings) -> Outcome:
    names = args.name or list(BIJECTIONS)
    sweeps = []
    for name in names:
        bijection = BIJECTIONS[name]
        if args.n < bijection.minimum_n:
            logger.info('skipping %s below n=%d', name, bijection.minimum_n)
            continue
        k = args.k if bijection.takes_k else None
        sweeps.append(sweep(bijection, args.n, k, budget=settings.enumeration_budget))
    report = CheckReport()
    for s in sweeps:
        report.extend(s.checks())
    return Outcome(sweeps, _rows_of(report), report.lines, report.passed)


DISTRIBUTIONS = {
    'exact': rank_distribution,
    'spectral': spectral_distribution,
}


def do_distribution(args, settings) -> Outcome:
    if args.method == 'brute':
        dist = brute_force_distribution(args.n, args.k, budget=settings.tuple_budget)
    else:
        dist = DISTRIBUTIONS[args.method](args.n, args.k)

    if not args.check:
        return Outcome(dist, dist.rows,
                       lambda: (f'{r["rank"]}:\t{csv_val(r["p"])}\t{csv_val(r["mass"])}'
                                for r in dist.rows()))
    report = cross_checks(args.n, args.k)
    report.extend(verify_spectral_identities(args.n))
    return Outcome({'distribution': dist, 'checks': report}, _rows_of(report),
                   report.lines, report.passed)


def _fresh_seed() -> int:
    return int(np.random.SeedSequence().entropy) % SEED_LIMIT


def do_simulate(args, settings) -> Outcome:
    seed = args.seed
    if seed is None:
        seed = _fresh_seed()
        print(f'seed {seed}', file=sys.stderr)
    sample = monte_carlo(args.n, args.k, args.trials, seed, workers=args.workers,
                         settings=settings)

    def lines():
        yield f'seed:\t{sample.seed}'
        for r in sample.rows():
            yield f'{r["rank"]}:\t{r["count"]}\t{r["empirical"]:.6f}\t{float(r["exact"]):.6f}'
        yield f'within 4 sigma:\t{csv_val(sample.passed())}'

    return Outcome({'sample': sample, 'within_4_sigma': sample.passed()}, sample.rows, lines)


def do_asymptotics(args, settings) -> Outcome:
    kind = args.report or ('mod' if args.m is not None else 'growth')
    if kind == 'growth':
        report = growth_report(args.n)
        checks = report.checks()
        rows = report.rows
    elif kind == 'unimodality':
        report = unimodality_report(args.n)
        checks = report.checks()
        rows = _rows_of(checks)
    else:
        if args.m is None:
            raise UsageError('--m is required for the mod report')
        report = mod_distribution(args.n, args.m)
        checks = report.checks()
        checks.extend(mod_trend(args.m, [args.n, 2 * args.n]).checks())
        rows = report.rows
    return Outcome({'report': report, 'checks': checks}, rows, checks.lines, checks.passed)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {text}')
    return value


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f'expected a non-negative integer, got {text}')
    return value


def _seed(text):
    value = int(text)
    if not 0 <= value < SEED_LIMIT:
        raise argparse.ArgumentTypeError(f'seed must fit in 64 unsigned bits, got {text}')
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='json',
                        help='Output format (default json).')
    common.add_argument('--budget', type=_positive, default=None,
                        help='Most elements, or factor tuples, an enumeration may visit. '
                             'Overrides PINJ_BUDGET and pinj.toml.')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress to stderr; repeat for debug output.')

    element = argparse.ArgumentParser(add_help=False)
    element.add_argument('--n', type=_natural, help='Size of the ground set {1..n}.')
    element.add_argument('--chart', action='append',
                         help='Element in chart notation, e.g. "(1,2)[3]".')
    element.add_argument('--pairs', action='append',
                         help='Element as a JSON list of [x, y] pairs.')
    element.add_argument('--element', action='append',
                         help='Element as JSON {"n": ..., "map": [...]}.')

    parser = argparse.ArgumentParser(
        prog='pinj',
        description='Partial injections of {1..n}: charts, counts, identities and '
                    'random products.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('decompose', parents=[common, element],
                       help='Chart decomposition and profile of one element.')
    p.set_defaults(handler=do_decompose)

    p = sub.add_parser('compose', parents=[common, element],
                       help='Product of the given elements, left to right.')
    p.add_argument('--power', type=_natural, help='Raise the product to this power.')
    p.set_defaults(handler=do_compose)

    p = sub.add_parser('count', parents=[common], help='Closed-form counts for IS_n.')
    p.add_argument('--n', type=_natural, required=True)
    p.add_argument('--field', choices=FIELDS)
    p.add_argument('--all', action='store_true', help='Every field (the default).')
    p.set_defaults(handler=do_count)

    p = sub.add_parser('verify', parents=[common], help='Check the counting identities.')
    p.add_argument('--n', type=_natural, required=True)
    p.add_argument('--all', action='store_true', help='Every identity (the default).')
    p.add_argument('--identity', action='append', choices=IDENTITY_NAMES)
    p.add_argument('--spectral', action='store_true',
                   help='Also check the identities of the product matrix.')
    p.set_defaults(handler=do_verify)

    p = sub.add_parser('bijection', parents=[common],
                       help='Sweep bijections over their whole domain.')
    p.add_argument('--n', type=_natural, required=True)
    p.add_argument('--k', type=_positive, help='Defect, for maps split by defect.')
    p.add_argument('--name', action='append', choices=list(BIJECTIONS))
    p.set_defaults(handler=do_bijection)

    p = sub.add_parser('distribution', parents=[common],
                       help='Exact rank distribution of k-fold random products.')
    p.add_argument('--n', type=_natural, required=True)
    p.add_argument('--k', type=_positive, required=True)
    p.add_argument('--method', choices=['exact', 'spectral', 'brute'], default='exact')
    p.add_argument('--check', action='store_true',
                   help='Run the cross checks and spectral identities too.')
    p.set_defaults(handler=do_distribution)

    p = sub.add_parser('simulate', parents=[common],
                       help='Monte Carlo estimate of the rank distribution.')
    p.add_argument('--n', type=_natural, required=True)
    p.add_argument('--k', type=_positive, required=True)
    p.add_argument('--trials', type=_positive, required=True)
    p.add_argument('--seed', type=_seed, help='Unsigned 64-bit seed; drawn and printed if absent.')
    p.add_argument('--workers', type=_positive, default=1)
    p.set_defaults(handler=do_simulate)

    p = sub.add_parser('asymptotics', parents=[common],
                       help='Growth, unimodality and rank-modulo-m reports.')
    p.add_argument('--n', type=_natural, default=300)
    p.add_argument('--m', type=_positive)
    p.add_argument('--report', choices=['growth', 'unimodality', 'mod'])
    p.set_defaults(handler=do_asymptotics)

    return parser


def _configure_logging(verbosity):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(name)s: %(levelname)s: %(message)s'))
    logger.handlers[:] = [handler]
    logger.setLevel(logging.DEBUG if verbosity > 1 else logging.INFO if verbosity else logging.WARNING)


def _write(outcome: Outcome, fmt, stream):
    writer = Writer(stream)
    if fmt == 'json':
        writer.write_json(outcome.payload)
    elif fmt == 'csv':
        writer.write_csv(outcome.rows())
    else:
        writer.write_lines(outcome.lines())


def run(argv=None, stdout=None) -> int:
    """Parse `argv`, run the subcommand and write its output; returns the exit status."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    _configure_logging(args.verbose)

    try:
        settings = config.load(enumeration_budget=args.budget, tuple_budget=args.budget)
        outcome = args.handler(args, settings)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f'pinj: error: {e}', file=sys.stderr)
        return 2
    except RankConstancyError as e:
        print(f'pinj: check failed: {e}', file=sys.stderr)
        return 1
    except (PinjError, ValueError, KeyError) as e:
        print(f'pinj: error: {e.args[0] if e.args else e}', file=sys.stderr)
        return 2

    _write(outcome, args.format, stdout)
    if outcome.passed is False:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
