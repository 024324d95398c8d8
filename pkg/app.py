"""Command-line entry point: ``python app.py <group> <action> [options]``.

Every exit path prints one JSON document on stdout. Exit code 0 means
success, 2 means the computation ran but a verification failed, 1 means a
usage, parse or computation error.
"""
import argparse
import logging
import sys

from config import get_config
from models.certificate import MODES
from routes import EXIT_ERROR
from routes.algebra import algebra_group
from routes.band import band_group
from routes.deform import deform_group
from routes.euclid import euclid_group
from routes.fixtures import fixtures_group
from routes.homology import homology_group
from routes.module import module_group
from routes.tau import tau_group
from utils.errors import TubedefError, UsageError
from utils.helpers import dump_json, write_json

logger = logging.getLogger('tubedef')

COMMAND_GROUPS = (algebra_group, module_group, homology_group, tau_group, band_group,
                  deform_group, euclid_group, fixtures_group)


class JsonArgumentParser(argparse.ArgumentParser):
    """Argument errors become UsageError so they are reported as JSON."""

    def error(self, message):
        raise UsageError(message)


def _common_options(cfg) -> argparse.ArgumentParser:
    common = JsonArgumentParser(add_help=False)
    common.add_argument('--algebra', metavar='FILE', help='AlgebraFile JSON')
    common.add_argument('--module', metavar='FILE', help='ModuleFile JSON')
    common.add_argument('--module2', metavar='FILE', help='second ModuleFile for hom, iso and ext')
    common.add_argument('--seed', type=int, default=cfg.DEFAULT_SEED)
    common.add_argument('--levels', type=int, default=cfg.DEFAULT_LEVELS, help='truncation level L')
    common.add_argument('--out', metavar='FILE', help='also write the JSON payload to FILE')
    common.add_argument('--max-degree', type=int, default=cfg.MAX_DEGREE, help='path-length bound')
    common.add_argument('--max-length', type=int, default=cfg.MAX_BAND_LENGTH, help='band length bound')
    common.add_argument('--n', type=int, default=1, help='syzygy or Ext degree')
    common.add_argument('--lambda', dest='lam', metavar='SCALAR', help='band or tube parameter')
    common.add_argument('--m', type=int, default=1, help='Jordan block size')
    common.add_argument('--report', metavar='FILE', help='certificate report to recheck')
    common.add_argument('--mode', choices=MODES, help='tower construction (default: band when available)')
    common.add_argument('--dot', action='store_true', help='include Graphviz text of the quiver')
    common.add_argument('--jobs', type=int, default=1, help='worker threads for searches')
    return common


def create_parser(cfg=None) -> argparse.ArgumentParser:
    """Build the parser and register every command group."""
    if cfg is None:
        cfg = get_config()
    parser = JsonArgumentParser(prog=cfg.TOOL_NAME,
                                description='Exact certificates for deformation rings of tube-mouth modules.')
    parser.add_argument('--version', action='version', version=f'{cfg.TOOL_NAME} {cfg.TOOL_VERSION}')
    groups = parser.add_subparsers(dest='group', metavar='GROUP')
    groups.required = True
    common = _common_options(cfg)
    for group in COMMAND_GROUPS:
        group.register(groups, parents=[common])
    return parser


def configure_logging(level: str):
    """Log to stderr only; stdout carries the JSON payload."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, '_tubedef', False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    handler._tubedef = True
    root.addHandler(handler)
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))


def main(argv=None) -> int:
    cfg = get_config()
    configure_logging(cfg.LOG_LEVEL)
    out = None
    try:
        args = create_parser(cfg).parse_args(argv)
        out = args.out
        logger.debug('running %s %s', args.group, args.action)
        payload, status = args.handler(args)
    except TubedefError as exc:
        logger.error('%s: %s', exc.kind, exc.detail)
        payload, status = exc.to_dict(), EXIT_ERROR
    except Exception as exc:
        logger.exception('unexpected failure')
        payload, status = {'error': {'kind': 'internal', 'detail': f'{type(exc).__name__}: {exc}'}}, EXIT_ERROR

    if out is not None:
        try:
            write_json(out, payload)
        except OSError as exc:
            payload, status = {'error': {'kind': 'io', 'detail': str(exc)}}, EXIT_ERROR
    sys.stdout.write(dump_json(payload))
    return status


if __name__ == '__main__':
    sys.exit(main())
