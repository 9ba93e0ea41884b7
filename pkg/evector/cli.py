#!/usr/bin/env python3
"""
Command-line surface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition failure,
3 property violation.
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from . import settings
from .bound_engine import bound_report, minimize_eg_bnb, minimize_eg_exhaustive
from .cli_io import FAMILIES, Report, generate, read_instance, serialize_instance
from .dim_two import brute_force_dim2_oracle, certify_dimension_two
from .errors import EVectorError, InputError, PreconditionError, PropertyViolation, UsageError
from .graph_core import Digraph, e_vector, is_acyclic, is_transitive, maximal_vertices
from .orderings import (
    Ranking,
    arc_weight_sum,
    average_relational_distance,
    enumerate_orderings,
    require_valid_ordering,
    some_topological_ordering,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_PROPERTY = 3


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', default=argparse.SUPPRESS,
                        help='Emit one JSON document on standard output')
    common.add_argument('--quiet', action='store_true', default=argparse.SUPPRESS,
                        help='Only log warnings and errors')
    common.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS,
                        help='Debug logging; certify also lists alternative realizers')

    parser = _ArgumentParser(
        prog='evector',
        description='e-vector bounds and dimension-two certificates for acyclic digraphs',
        parents=[common],
    )
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    analyze = commands.add_parser('analyze', parents=[common], help='e-vector and basic structure')
    analyze.add_argument('file', help="Instance file, '-' for standard input")

    check = commands.add_parser('check', parents=[common], help='Check one ordering against the bound')
    check.add_argument('file')
    check.add_argument('--ordering', required=True, help='Comma-separated ranks r1,r2,...')

    minimize = commands.add_parser('minimize', parents=[common], help='Minimise <e,g>')
    minimize.add_argument('file')
    method = minimize.add_mutually_exclusive_group()
    method.add_argument('--exhaustive', action='store_true', help='Enumerate every ordering')
    method.add_argument('--bnb', action='store_true', help='Branch and bound (default)')
    minimize.add_argument('--budget', type=int, default=settings.DEFAULT_NODE_BUDGET,
                          help='Node budget for branch and bound')
    minimize.add_argument('--cap', type=int, default=settings.EXHAUSTIVE_CAP,
                          help=f'Vertex cap for --exhaustive (default: {settings.EXHAUSTIVE_CAP})')
    minimize.add_argument('--workers', type=int, default=settings.DEFAULT_WORKERS)

    certify = commands.add_parser('certify', parents=[common], help='Certify dimension at most two')
    certify.add_argument('file')
    certify.add_argument('--as-is', action='store_true',
                         help='Do not take the transitive closure first')
    certify.add_argument('--budget', type=int, default=settings.DEFAULT_NODE_BUDGET)
    certify.add_argument('--workers', type=int, default=settings.DEFAULT_WORKERS)

    oracle = commands.add_parser('oracle', parents=[common], help='Brute-force realizer search')
    oracle.add_argument('file')
    oracle.add_argument('--cap', type=int, default=settings.ORACLE_CAP,
                        help=f'Vertex cap (default: {settings.ORACLE_CAP})')

    enumerate_cmd = commands.add_parser('enumerate', parents=[common], help='List acyclic orderings')
    enumerate_cmd.add_argument('file')
    enumerate_cmd.add_argument('--max', type=int, default=settings.DEFAULT_ENUMERATION_LIMIT,
                               dest='max_count')

    gen = commands.add_parser('gen', parents=[common], help='Write a generated instance')
    gen.add_argument('family', choices=FAMILIES)
    gen.add_argument('--n', type=int)
    gen.add_argument('--k', type=int)
    gen.add_argument('--p', type=float)
    gen.add_argument('--seed', type=int)
    gen.add_argument('--name', help='Instance name written to the header comment')

    return parser


def _load(path: str) -> Tuple[Digraph, Optional[str]]:
    try:
        if path == '-':
            text = sys.stdin.read()
        else:
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
    except UnicodeDecodeError as e:
        raise InputError(f"{path} is not valid UTF-8: {e.reason} at byte {e.start}") from None
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None
    instance = read_instance(text)
    logger.info(f"Loaded {path}: {instance.n} vertices, {len(instance.arcs)} arcs")
    return instance.to_digraph(), instance.name


def _parse_ordering(text: str) -> Ranking:
    if not text.strip():
        return Ranking(())
    parts = [part.strip() for part in text.split(',')]
    if '' in parts:
        raise UsageError(f"--ordering has an empty field: {text!r}")
    try:
        return Ranking(tuple(int(part) for part in parts))
    except ValueError:
        raise UsageError(f"--ordering must be comma-separated integers, got {text!r}") from None


def _analyze(args) -> Report:
    D, name = _load(args.file)
    e = e_vector(D)
    data = {
        'name': name,
        'n': D.n,
        'arcs': D.arc_count,
        'e_vector': list(e),
        'e_sum': e.total(),
        'ee': e.norm_squared(),
        'acyclic': is_acyclic(D),
        'transitive': is_transitive(D),
        'maximal_vertices': maximal_vertices(D),
    }
    if data['acyclic']:
        g = some_topological_ordering(D)
        data['ordering'] = list(g)
        data['bound'] = bound_report(D, g).to_dict()
        if D.arc_count:
            data['average_relational_distance'] = str(average_relational_distance(D, g))
    return Report('analyze', data)


def _check(args) -> Report:
    D, _ = _load(args.file)
    g = _parse_ordering(args.ordering)
    require_valid_ordering(D, g)
    data = {
        'ordering': list(g),
        'bound': bound_report(D, g).to_dict(),
        'arc_weight_sum': arc_weight_sum(D, g),
    }
    if D.arc_count:
        data['average_relational_distance'] = str(average_relational_distance(D, g))
    return Report('check', data)


def _minimize(args) -> Report:
    D, _ = _load(args.file)
    if args.exhaustive:
        result = minimize_eg_exhaustive(D, cap=args.cap)
        method = 'exhaustive'
    else:
        result = minimize_eg_bnb(D, budget=args.budget, workers=args.workers)
        method = 'bnb'
    ee = e_vector(D).norm_squared()
    data = {'method': method, 'ee': ee, 'floor': ee // 2}
    data.update(result.to_dict())
    data['gap2'] = 2 * result.min_eg - ee
    return Report('minimize', data)


def _certify(args) -> Report:
    D, _ = _load(args.file)
    outcome = certify_dimension_two(
        D,
        as_is=args.as_is,
        budget=args.budget,
        workers=args.workers,
        verbose=getattr(args, 'verbose', False),
    )
    return Report('certify', outcome.to_dict())


def _oracle(args) -> Report:
    D, _ = _load(args.file)
    return Report('oracle', {'n': D.n, 'dim_at_most_two': brute_force_dim2_oracle(D, cap=args.cap)})


def _enumerate(args, out: TextIO, as_json: bool) -> Report:
    """Write orderings as the walker produces them; the returned report holds the totals."""
    D, _ = _load(args.file)
    stream = enumerate_orderings(D, max_count=args.max_count)
    if as_json:
        out.write('{"command": "enumerate", "data": {"orderings": [')
        for index, g in enumerate(stream):
            out.write((", " if index else "") + json.dumps(list(g)))
        out.write('], "count": ' + json.dumps(stream.count)
                  + ', "truncated": ' + json.dumps(stream.truncated) + '}}\n')
    else:
        out.write("\n".join(Report.banner('enumerate')) + "\norderings:\n")
        for index, g in enumerate(stream, start=1):
            out.write(f"  [{index}] {Report.format_value(list(g))}\n")
        out.write(f"count: {stream.count}\n")
        out.write(f"truncated: {Report.format_value(stream.truncated)}\n")
    return Report('enumerate', {'count': stream.count, 'truncated': stream.truncated})


def _gen(args) -> Report:
    D = generate(args.family, n=args.n, k=args.k, p=args.p, seed=args.seed)
    return Report('gen', {
        'family': args.family,
        'n': D.n,
        'arcs': [list(arc) for arc in D.sorted_arcs()],
        'instance': serialize_instance(D, name=args.name),
    })


HANDLERS: Dict[str, Callable[[argparse.Namespace], Report]] = {
    'analyze': _analyze,
    'check': _check,
    'minimize': _minimize,
    'certify': _certify,
    'oracle': _oracle,
    'gen': _gen,
}

# Handlers that write their own output while they run
STREAMING_HANDLERS: Dict[str, Callable[[argparse.Namespace, TextIO, bool], Report]] = {
    'enumerate': _enumerate,
}


def _emit(report: Report, as_json: bool, out) -> None:
    if as_json:
        out.write(report.to_json() + "\n")
    elif report.command == 'gen':
        out.write(report.data['instance'])
    else:
        out.write(report.to_text() + "\n")


def run_command(argv: Sequence[str], out=None) -> Tuple[int, Optional[Report]]:
    """
    Run one subcommand.

    Args:
        argv: Arguments without the program name
        out: Stream for the report, standard output by default

    Returns:
        Tuple of (exit code, report or None on failure)
    """
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as e:
        logger.error(f"usage: {e}")
        return EXIT_USAGE, None

    package_logger = logging.getLogger('evector')
    if getattr(args, 'quiet', False):
        package_logger.setLevel(logging.WARNING)
    elif getattr(args, 'verbose', False):
        package_logger.setLevel(logging.DEBUG)
    else:
        package_logger.setLevel(logging.INFO)

    as_json = getattr(args, 'json', False)
    streaming = args.command in STREAMING_HANDLERS
    try:
        if streaming:
            report = STREAMING_HANDLERS[args.command](args, out, as_json)
        else:
            report = HANDLERS[args.command](args)
    except InputError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE, None
    except PropertyViolation as e:
        logger.error(f"{args.command}: property violation, this is a bug: {e}")
        return EXIT_PROPERTY, None
    except PreconditionError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_PRECONDITION, None
    except EVectorError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE, None

    if not streaming:
        _emit(report, as_json, out)
    return EXIT_OK, report


def main(argv: Optional[List[str]] = None) -> None:
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    sys.exit(code)


if __name__ == "__main__":
    main()
