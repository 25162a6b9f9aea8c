"""Command line interface."""
import argparse
import logging
import random
import sys

import frechetrans.arrangement
import frechetrans.bench
import frechetrans.errors
import frechetrans.fileio
import frechetrans.frechet
import frechetrans.hardness
import frechetrans.offline
import frechetrans.settings
import frechetrans.solver

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _decide(args):
    pi = frechetrans.fileio.read_curve(args.pi)
    sigma = frechetrans.fileio.read_curve(args.sigma)
    if args.delta < 0:
        raise frechetrans.errors.PreconditionError(
            '--delta must be >= 0, got %r' % (args.delta,))
    decision = frechetrans.solver.decide_translation(
        pi, sigma, args.delta, engine=args.engine, prune=args.prune)
    if not decision:
        print('false')
        return EXIT_NO
    prefix = '-' if decision.prefix is None else '%d' % (decision.prefix,)
    print('true %r %r %s' % (decision.witness.x, decision.witness.y, prefix))
    return EXIT_OK


def _compute(args):
    pi = frechetrans.fileio.read_curve(args.pi)
    sigma = frechetrans.fileio.read_curve(args.sigma)
    result = frechetrans.solver.compute_translation_distance(
        pi, sigma, engine=args.engine, prune=args.prune)
    print('%r %r %r' % (result.value, result.witness.x, result.witness.y))
    return EXIT_OK


def _frechet(args):
    pi = frechetrans.fileio.read_curve(args.pi)
    sigma = frechetrans.fileio.read_curve(args.sigma)
    print('%r' % (frechetrans.frechet.frechet_value(pi, sigma),))
    return EXIT_OK


def _arrangement(args):
    pi = frechetrans.fileio.read_curve(args.pi)
    sigma = frechetrans.fileio.read_curve(args.sigma)
    arrangement = frechetrans.solver.translation_arrangement(
        pi, sigma, args.delta, prune=args.prune)
    if arrangement is None:
        LOGGER.warning('endpoint disks are disjoint at delta=%r', args.delta)
        return EXIT_NO
    sys.stdout.write(frechetrans.arrangement.format_arrangement(arrangement))
    return EXIT_OK


def _offline_reach(args):
    matrix = frechetrans.fileio.read_matrix(args.matrix)
    n, updates = frechetrans.fileio.read_updates(args.updates)
    if n != matrix.n_rows:
        raise frechetrans.errors.FormatError(
            'update header says n=%d, matrix has %d rows'
            % (n, matrix.n_rows), args.updates, 1)
    cfg = None
    if args.chunk is not None:
        cfg = frechetrans.offline.ChunkConfig(args.chunk)
    for answer in frechetrans.offline.iter_offline_answers(matrix, updates,
                                                           cfg):
        print('1' if answer else '0')
    return EXIT_OK


def _gen_hard(args):
    ov = frechetrans.fileio.read_ov(args.ov)
    shuffle = None if args.seed is None else random.Random(args.seed)
    pi, sigma, delta = frechetrans.hardness.generate_instance(ov, shuffle)
    frechetrans.fileio.write_curve(args.out_pi, pi)
    frechetrans.fileio.write_curve(args.out_sigma, sigma)
    print('%r' % (delta,))
    return EXIT_OK


def _verify_hard(args):
    ov = frechetrans.fileio.read_ov(args.ov)
    report = frechetrans.hardness.reduction_report(ov, engine=args.engine,
                                                   tol=args.tol)
    print(report)
    return EXIT_OK if report.verified else EXIT_NO


def _bench(args):
    out = sys.stdout if args.out == '-' else open(args.out, 'w', newline='')
    try:
        frechetrans.bench.bench_offline(args.n, args.updates, args.seed,
                                        out=out, sweep_k=args.sweep_k,
                                        budget=args.budget)
    except frechetrans.errors.BudgetExceeded as exc:
        LOGGER.warning('%d rows written before the budget ran out',
                       len(exc.rows))
        raise
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _add_curves(parser):
    parser.add_argument('--pi', required=True, help='First curve file.')
    parser.add_argument('--sigma', required=True,
                        help='Second curve file, the translated one.')


def _add_engine(parser):
    parser.add_argument('--engine', choices=frechetrans.settings.ENGINES,
                        default=None, help='Decision engine.')
    parser.add_argument('--no-prune', dest='prune', action='store_false',
                        default=None, help='Keep every difference point.')


def build_parser():
    """Returns the argument parser of the frechetrans command."""
    parser = argparse.ArgumentParser(
        prog='frechetrans',
        description='Discrete Frechet distance under translation.')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Log at DEBUG level.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    sub = commands.add_parser('decide', help='Decide distance <= delta.')
    _add_curves(sub)
    sub.add_argument('--delta', type=float, required=True)
    _add_engine(sub)
    sub.set_defaults(func=_decide)

    sub = commands.add_parser('compute', help='Distance under translation.')
    _add_curves(sub)
    _add_engine(sub)
    sub.set_defaults(func=_compute)

    sub = commands.add_parser('frechet', help='Distance, no translation.')
    _add_curves(sub)
    sub.set_defaults(func=_frechet)

    sub = commands.add_parser('arrangement',
                              help='Dump the disk arrangement walked by '
                                   'decide.')
    _add_curves(sub)
    sub.add_argument('--delta', type=float, required=True)
    sub.add_argument('--no-prune', dest='prune', action='store_false',
                     default=None, help='Keep every difference point.')
    sub.set_defaults(func=_arrangement)

    sub = commands.add_parser('offline-reach',
                              help='Answer a matrix update sequence.')
    sub.add_argument('--matrix', required=True)
    sub.add_argument('--updates', required=True)
    sub.add_argument('--chunk', type=int, default=None,
                     help='Updates per chunk.')
    sub.set_defaults(func=_offline_reach)

    sub = commands.add_parser('gen-hard', help='Curves from a 4-OV file.')
    sub.add_argument('--ov', required=True)
    sub.add_argument('--out-pi', required=True)
    sub.add_argument('--out-sigma', required=True)
    sub.add_argument('--seed', type=int, default=None,
                     help='Shuffle OR gadget parts with this seed.')
    sub.set_defaults(func=_gen_hard)

    sub = commands.add_parser('verify-hard',
                              help='Check a reduction against 4-OV.')
    sub.add_argument('--ov', required=True)
    sub.add_argument('--engine', choices=frechetrans.settings.ENGINES,
                     default='naive')
    sub.add_argument('--tol', type=float, default=1e-12)
    sub.set_defaults(func=_verify_hard)

    sub = commands.add_parser('bench', help='Time offline reachability.')
    sub.add_argument('--n', type=int, nargs='+', default=[17, 33])
    sub.add_argument('--updates', type=int, nargs='+', default=[100],
                     help='Update counts, 0 for n^2.')
    sub.add_argument('--seed', type=int, nargs='+', default=[0])
    sub.add_argument('--sweep-k', action='store_true')
    sub.add_argument('--budget', type=float, default=None,
                     help='Seconds; once exceeded the CSV ends with a '
                          'TRUNCATED row and the exit status is 2.')
    sub.add_argument('--out', default='-', help='CSV file, - for stdout.')
    sub.set_defaults(func=_bench)
    return parser


def dispatch(argv):
    """Run one command.

    Args:
        argv (list): Arguments without the program name.

    Returns:
        int: 0 on success or a positive decision, 1 on a negative decision
        or failed verification, 2 on errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    level = logging.DEBUG if args.verbose else frechetrans.settings.LOG_LEVEL
    logging.basicConfig(level=level,
                        format='%(asctime)s %(name)s %(levelname)s '
                               '%(message)s')
    try:
        return args.func(args)
    except frechetrans.errors.Error as exc:
        sys.stderr.write('frechetrans: %s\n' % (exc,))
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write('frechetrans: %s\n' % (exc,))
        return EXIT_ERROR


def main(argv=None):
    """Console script entry point."""
    sys.exit(dispatch(sys.argv[1:] if argv is None else argv))
