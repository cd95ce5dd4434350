"""Command-line interface.

    biortho generate --family diag-power --param alpha=1 --dim 16 --out p.json
    biortho analyze --pair p.json [--tol-scale X] [--seed S] [--out report.json]
    biortho sweep --family diag-mixed --dims 8,16,32,64 [--growth-tol 0.05]

Reports are JSON on stdout (or ``--out``).  Exit codes: 0 all checks pass,
2 checks failed, 3 regularity indeterminate, 4 input error, 5 conditioning
exceeded.
"""

import argparse
import sys
from pathlib import Path

from .errors import (BadParameter, BiorthoError, FamilyNotRegular, ParseError,
                     SchemaError, ValidationError)
from .families import FAMILIES, PairFamily, generate, parse_params
from .frames import GROWTH_TOL
from .io import dumps, load_pair, save_pair
from .report import EXIT_INDETERMINATE, EXIT_INPUT, EXIT_OK, analyze, sweep


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _family(args):
    return PairFamily(args.family, parse_params(args.param))


def _dims(text):
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise BadParameter(f'--dims expects comma-separated integers, got '
                           f'{text!r}') from None


def cmd_generate(args):
    pair = generate(_family(args), args.dim)
    save_pair(pair, args.out)
    return EXIT_OK


def cmd_analyze(args):
    pair = load_pair(args.pair)
    report = analyze(pair, tol_scale=args.tol_scale, seed=args.seed,
                     provenance=str(args.pair))
    _emit(report.to_json(), args.out)
    return report.exit_code


def cmd_sweep(args):
    result = sweep(_family(args), _dims(args.dims), growth_tol=args.growth_tol,
                   tol_scale=args.tol_scale, seed=args.seed,
                   workers=args.workers)
    _emit(dumps(result), args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='biortho',
        description='Analyze truncated regular biorthogonal pairs.')
    sub = parser.add_subparsers(dest='command', required=True)

    def family_args(p):
        p.add_argument('--family', required=True, choices=sorted(FAMILIES))
        p.add_argument('--param', action='append', default=[],
                       metavar='KEY=VALUE',
                       help='family parameter, repeatable (e.g. alpha=1.0)')

    def common(p):
        p.add_argument('--seed', type=int, default=0,
                       help='seed for randomized checks (default: %(default)s)')
        p.add_argument('--tol-scale', type=float, default=1.0,
                       help='multiplier on every default tolerance')
        p.add_argument('--out', help='write the report here instead of stdout')

    p = sub.add_parser('generate', help='write a PairFile for a family')
    family_args(p)
    p.add_argument('--dim', type=int, required=True)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser('analyze', help='run all checks on a PairFile')
    p.add_argument('--pair', required=True)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('sweep', help='Riesz classification over dimensions')
    family_args(p)
    p.add_argument('--dims', required=True, help='comma-separated, ascending')
    p.add_argument('--growth-tol', type=float, default=GROWTH_TOL)
    p.add_argument('--workers', type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FamilyNotRegular as exc:
        print(f'biortho: {exc}', file=sys.stderr)
        return EXIT_INDETERMINATE
    except (BadParameter, ParseError, SchemaError, ValidationError,
            OSError) as exc:
        print(f'biortho: {exc}', file=sys.stderr)
        return EXIT_INPUT
    except BiorthoError as exc:
        print(f'biortho: {type(exc).__name__}: {exc}', file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
