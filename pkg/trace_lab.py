import argparse
import logging
import os
import sys

from src.catalog import CATALOG_NAMES, get_example_from_name
from src.evaluate import run_calabi_yau, run_cartan, run_handle, run_nakayama, run_star, run_trace, run_validate, \
    run_verify
from src.exceptions import TraceLabError
from src.utils.report import write_report
from src.workspace import read_workspace

logger = logging.getLogger('trace_lab')

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2


def default_seed():
    value = os.environ.get('TRACE_LAB_SEED')
    try:
        return int(value) if value is not None else 42
    except ValueError:
        logger.warning(f'TRACE_LAB_SEED={value!r} is not an integer, using seed 42')
        return 42


def load_workspace(args):
    if args.example is not None:
        return get_example_from_name(args.example).get_workspace()
    return read_workspace(args.file)


def run_verb(ws, args):
    if args.verb == 'validate':
        return run_validate(ws)
    if args.verb == 'nakayama':
        return run_nakayama(ws, seed=args.seed)
    if args.verb == 'trace':
        return run_trace(ws)
    if args.verb == 'handle':
        return run_handle(ws)
    if args.verb == 'star':
        return run_star(ws)
    if args.verb == 'cartan':
        return run_cartan(ws)
    if args.verb == 'calabi_yau':
        return run_calabi_yau(ws, samples=args.samples, seed=args.seed)
    return run_verify(ws, samples=args.samples, seed=args.seed)


def main(args):
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    logger.info(f'Arguments: {args}')
    try:
        ws = load_workspace(args)
    except TraceLabError as error:
        print(f'parse error: {error}', file=sys.stderr)
        return EXIT_INVALID_INPUT

    validation = run_validate(ws)
    failed = [c for c in validation if c.failed]
    if failed and args.verb != 'validate':
        print(f'validation error: {failed[0].subject} at {failed[0].value}', file=sys.stderr)
        return EXIT_INVALID_INPUT

    try:
        checks = validation if args.verb == 'validate' else run_verb(ws, args)
    except TraceLabError as error:
        print(f'{type(error).__name__}: {error}', file=sys.stderr)
        return EXIT_INVALID_INPUT
    write_report(checks, args.out)

    if args.verb == 'validate' and failed:
        return EXIT_INVALID_INPUT
    n_failed = sum(c.failed for c in checks)
    if n_failed:
        logger.warning(f'{n_failed} of {len(checks)} checks failed')
        return EXIT_CHECK_FAILED
    return EXIT_OK


def get_parser():
    parser = argparse.ArgumentParser(description='Exact checks of twisted traces and trace field theory on '
                                                 'finite-dimensional algebras')
    parser.add_argument('verb', choices=['validate', 'nakayama', 'trace', 'handle', 'star', 'cartan', 'calabi_yau',
                                         'verify'],
                        help='what to compute')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--example', '-e', choices=CATALOG_NAMES,
                        help='a builtin catalog workspace')
    source.add_argument('--file', '-f', type=str,
                        help='a workspace JSON file')
    parser.add_argument('--seed', '-s', type=int, default=default_seed(),
                        help='seed of all random checks, defaults to $TRACE_LAB_SEED or 42')
    parser.add_argument('--samples', '-n', type=int, default=100,
                        help='random pairs per Calabi-Yau cyclicity check; partial traces use a quarter, '
                             'the trace field suite half of it')
    parser.add_argument('--out', '-o', type=str,
                        help='report file, defaults to stdout')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='log progress to stderr')
    return parser


if __name__ == '__main__':
    arg_parser = get_parser()
    args = arg_parser.parse_args()
    sys.exit(main(args))
