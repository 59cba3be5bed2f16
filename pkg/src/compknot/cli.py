"""Command-line interface.

Exit codes: 0 success, 1 domain or data error, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import pdcode, primes
from .orbits import orbits_all, symmetry_group
from .tabulate import (composite_name, census, flavor_from_suffix, format_census, tabulate,
                       to_csv, to_json)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2

DEFAULT_PRIMES = Path('data') / 'primes9.tsv'


class UsageError(Exception):
    pass


def _load_table(path):
    if path is None:
        path = DEFAULT_PRIMES if DEFAULT_PRIMES.exists() else None
    return primes.load(path)


def _parse_code(text):
    try:
        return pdcode.parse(text, check=False)
    except pdcode.PDParseError as e:
        raise UsageError(f'parse error: {e}') from None


def cmd_validate(args, out):
    code = _parse_code(args.code)
    violation = pdcode.validate(code)
    if violation is None:
        print('ok', file=out)
        return EXIT_OK
    print(f'invalid: {violation}', file=out)
    return EXIT_ERROR


def cmd_sum(args, out):
    if len(args.codes) < 2:
        raise UsageError('sum needs at least two PD-codes')
    codes = [_parse_code(text) for text in args.codes]
    for i, code in enumerate(codes, start=1):
        violation = pdcode.validate(code)
        if violation is not None:
            print(f'code {i} invalid: {violation}', file=sys.stderr)
            return EXIT_ERROR
        if not code.crossings:
            print(f'code {i} is empty', file=sys.stderr)
            return EXIT_ERROR
    print(pdcode.serialize(pdcode.connected_sum_list(codes)), file=out)
    return EXIT_OK


def _factor_tokens(table, tokens):
    """Turn ``name[:flavor]`` tokens into (record, flavor) pairs."""
    pairs = []
    for tok in tokens:
        name, _, suffix = tok.partition(':')
        try:
            flavor = flavor_from_suffix(suffix)
        except ValueError as e:
            raise UsageError(str(e)) from None
        pairs.append((table[name], flavor))
    return pairs


def cmd_symmetry(args, out):
    table = _load_table(args.primes)
    try:
        pairs = _factor_tokens(table, args.factors)
    except KeyError as e:
        print(e.args[0], file=sys.stderr)
        return EXIT_ERROR
    if len(pairs) == 1:
        # a prime keeps its symmetry group under any flavor since Gamma is abelian
        print(pairs[0][0].symmetry.name, file=out)
        return EXIT_OK
    pairs.sort(key=lambda p: (p[0].key, p[1]))
    P = primes.FactorList.from_records(r for r, _ in pairs)
    flat = [g for _, g in pairs]
    x, i = [], 0
    for n in P.multiplicities:
        x.append(tuple(flat[i:i + n]))
        i += n
    print(symmetry_group(P, tuple(x)).name, file=out)
    return EXIT_OK


def cmd_orbits(args, out):
    table = _load_table(args.primes)
    try:
        records = [table[name] for name in args.factors]
    except KeyError as e:
        print(e.args[0], file=sys.stderr)
        return EXIT_ERROR
    try:
        P = primes.FactorList.from_records(records)
    except ValueError as e:
        raise UsageError(str(e)) from None
    for cls in orbits_all(P, with_symmetry=True):
        print(f'{composite_name(P, cls.representative)}\t{cls.orbit_size}\t{cls.symmetry.name}', file=out)
    return EXIT_OK


def cmd_tabulate(args, out):
    try:
        table = _load_table(args.primes)
    except (OSError, ValueError) as e:
        print(f'cannot load prime table: {e}', file=sys.stderr)
        return EXIT_ERROR
    rows = tabulate(table, args.max_crossings)
    render = to_json if args.format == 'json' else to_csv
    text = render(rows, include_pdcode=args.pdcodes)
    if args.output:
        Path(args.output).write_text(text, encoding='utf-8')
        summary = out
    else:
        out.write(text)
        summary = sys.stderr
    summary.write(format_census(census(rows)))
    return EXIT_OK


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer') from None
    if value < 1:
        raise argparse.ArgumentTypeError(f'{value} is not positive')
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog='compknot',
        description='Composite knots from prime factors, with their intrinsic symmetry groups.')
    sub = parser.add_subparsers(dest='command', required=True)

    primes_opt = argparse.ArgumentParser(add_help=False)
    primes_opt.add_argument('--primes', metavar='PATH',
                            help=f'prime table file (default: {DEFAULT_PRIMES} if present, else bundled table)')

    p = sub.add_parser('validate', help='check a PD-code')
    p.add_argument('code')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('sum', help='connected sum of PD-codes, in order')
    p.add_argument('codes', nargs='+', metavar='CODE')
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser('symmetry', parents=[primes_opt],
                       help='symmetry type of a composite given as name[:m|r|mr] tokens')
    p.add_argument('factors', nargs='+', metavar='NAME[:FLAVOR]')
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser('orbits', parents=[primes_opt], help='all composites with the given prime factors')
    p.add_argument('factors', nargs='+', metavar='NAME')
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser('tabulate', parents=[primes_opt], help='composite knot table and census')
    p.add_argument('--max-crossings', type=_positive_int, default=12, metavar='N')
    p.add_argument('--format', choices=('csv', 'json'), default='csv')
    p.add_argument('--output', metavar='PATH', help='write the table here (default: standard output)')
    p.add_argument('--pdcodes', action='store_true', help='include a composite PD-code column')
    p.set_defaults(func=cmd_tabulate)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f'{parser.prog} {args.command}: error: {e}', file=sys.stderr)
        return EXIT_USAGE
    except (OSError, primes.PrimeTableError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
