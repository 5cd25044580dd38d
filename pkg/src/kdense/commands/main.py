"""kdense/commands/main.py -- Command line interface.

Licensed under the terms of the BSD-3-Clause license.

Usage:
    kdense <command> --input PATH [options]

Commands:
    decompose   Decompose one snapshot.
    compare     Compare decompositions across snapshots.
    null        Compare k_max with a dK-random ensemble.
    core        dK analysis of H_kMAX.
    cone        Customer cones and rank overlaps of the densest set.

Exit status is 0 on success, 1 if an analysis failed, and 2 on usage
errors. A failed run leaves an INCOMPLETE marker in the output directory.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from .. import __version__
from .. import _defaults
from .. errors import KdenseError
from .. io import io as _io
from .. io.reports import REPORT_FORMATS, ReportHeader, ReportWriter
from . import compare, cone, core, decompose, null
from . config import RunConfig, merge_config


logger = logging.getLogger('kdense')

RUNNERS: Dict[str, Callable] = {
    'decompose': decompose.run,
    'compare': compare.run,
    'null': null.run,
    'core': core.run,
    'cone': cone.run,
}

_HELP = {
    'decompose': 'Decompose one snapshot.',
    'compare': 'Compare decompositions across snapshots.',
    'null': 'Compare k_max with a dK-random ensemble.',
    'core': 'dK analysis of the densest core.',
    'cone': 'Customer cones and rank overlaps of the densest set.',
}


def _add_options(parser: argparse.ArgumentParser) -> None:
    sup = argparse.SUPPRESS
    parser.add_argument('--input', '-i', dest='inputs', action='append',
                        default=sup, metavar='PATH',
                        help='Snapshot edge list. Repeat for several snapshots.')
    parser.add_argument('--cutoff', type=int, default=sup, metavar='EPOCH',
                        help='Discard edges last seen before EPOCH.')
    parser.add_argument('--bin-width', dest='bin_width', type=float,
                        default=sup, help='Width of profile bins.')
    parser.add_argument('--d', type=int, choices=(0, 1, 2), default=sup,
                        help='Order of the dK null model.')
    parser.add_argument('--instances', type=int, default=sup,
                        help='Number of random graphs per ensemble.')
    parser.add_argument('--seed', type=int, default=sup,
                        help='Base seed of all random streams.')
    parser.add_argument('--swap-factor', dest='swap_factor', type=float,
                        default=sup, help='Accepted swaps per edge.')
    parser.add_argument('--out', '-o', default=sup, metavar='DIR',
                        help='Output directory.')
    parser.add_argument('--format', choices=REPORT_FORMATS, default=sup,
                        help='Format of tabular reports.')
    parser.add_argument('--relationships', default=sup, metavar='PATH',
                        help='AS relationship file.')
    parser.add_argument('--weights', default=sup, metavar='PATH',
                        help='Per-AS weight file.')
    parser.add_argument('--ranks', action='append', default=sup,
                        metavar='PATH', help='Rank file. Repeatable.')
    parser.add_argument('--top-n', dest='top_n', type=int, default=sup,
                        help='Rank prefix compared with the densest set.')
    parser.add_argument('--workers', type=int, default=sup,
                        help='Number of worker processes.')
    parser.add_argument('--config', dest='config_file', default=None,
                        metavar='PATH', help='JSON config file.')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', '-v', action='store_true',
                           help='Log debug messages.')
    verbosity.add_argument('--quiet', '-q', action='store_true',
                           help='Log warnings and errors only.')


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the kdense command."""
    parser = argparse.ArgumentParser(
        prog='kdense', description='k-dense decomposition toolkit.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for name in RUNNERS:
        _add_options(subparsers.add_parser(name, help=_HELP[name]))
    return parser


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Configure the root handler of the command line interface."""
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format=_defaults.LOG_FORMAT,
                        stream=sys.stderr, force=True)


def execute(cfg: RunConfig) -> int:
    """Run the command of ``cfg`` and write its reports.

    Returns:
        Exit status.
    """
    out_dir = _io.make_outdir(cfg.out)
    _io.clear_incomplete(out_dir)
    header = ReportHeader(__version__, cfg.config_hash, cfg.seed, cfg.command)
    writer = ReportWriter(out_dir, header, cfg.format)
    try:
        RUNNERS[cfg.command](cfg, writer)
    except (KdenseError, OSError) as err:
        logger.error('%s failed: %s', cfg.command, err)
        _io.mark_incomplete(out_dir, f'{type(err).__name__}: {err}')
        return 1
    logger.info('%s: wrote %d reports to %s', cfg.command,
                len(writer.written), out_dir)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the kdense command.

    Args:
        argv:  Command line arguments without program name.

    Returns:
        Exit status.
    """
    args = vars(build_parser().parse_args(argv))
    command = args.pop('command')
    config_file = args.pop('config_file')
    configure_logging(args.pop('verbose'), args.pop('quiet'))

    try:
        cfg = merge_config(command, args, config_file)
    except KdenseError as err:
        logger.error('Invalid configuration: %s', err)
        return 1
    try:
        return execute(cfg)
    except (KdenseError, OSError) as err:
        logger.error('%s failed: %s', command, err)
        return 1


if __name__ == '__main__':
    sys.exit(main())
