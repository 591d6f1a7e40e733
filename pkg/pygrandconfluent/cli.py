"""Command line front-end: gch eval | spectrum | verify | classify."""
import argparse
import csv
import io
import json
import logging
import os
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence
from pygrandconfluent.AsymptoticClassifier import Branch, RawOdeParams, classify, to_gch_params
from pygrandconfluent.GchFunction import GchFunction, SeriesMode, f_poly
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.QQbarSpectrum import PhysicsParams, enumerate_spectrum
from pygrandconfluent.RecurrenceEngine import LambdaBranch
from pygrandconfluent.exceptions import GchError, PreconditionError, UsageError
from pygrandconfluent.testsuite import SUITES, Status, count_status
logger = logging.getLogger('GCH')

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

EVAL_COLUMNS = ['kind', 'x', 'z', 'value', 'eps0_part', 'eps1_part', 'truncated_at', 'last_term']
SPECTRUM_COLUMNS = ['l', 'order_i', 'n_values', 'E_squared', 'formula_id']
VERIFY_COLUMNS = ['suite', 'check', 'case', 'value', 'reference', 'deviation', 'tolerance', 'status', 'detail']


class GchArgumentParser(argparse.ArgumentParser):
    """ArgumentParser raising UsageError instead of printing and exiting."""

    def error(self, message):
        match = re.search(r'--([\w-]+)', message)
        field = match.group(1).replace('-', '_') if match else ''
        raise UsageError(message, field, message)


def _format_value(value) -> str:
    """ Shortest round-trip text for floats; '' for None. """
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ';'.join(_format_value(v) for v in value)
    return str(value)


def render(command: str, rows: List[dict], columns: Sequence[str], fmt: str, extra: Optional[dict] = None) -> str:
    """ Rows as CSV or as a versioned JSON document. """
    if fmt == 'json':
        doc = {'schema_version': SCHEMA_VERSION, 'command': command}
        doc.update(extra or {})
        doc['rows'] = rows
        return json.dumps(doc, indent=2) + '\n'
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_value(row.get(col)) for col in columns])
    return buffer.getvalue()


def error_document(err: GchError) -> str:
    """ Machine-readable error object for exit code 2. """
    doc = {'schema_version': SCHEMA_VERSION, 'error': dict(type=type(err).__name__, **err.as_dict())}
    return json.dumps(doc, indent=2) + '\n'


def load_params_json(text: Optional[str]) -> dict:
    """ Inline JSON object or path to a JSON file. """
    if not text:
        return {}
    try:
        doc = json.loads(text) if text.lstrip().startswith('{') else json.loads(Path(text).read_text())
    except (OSError, ValueError) as err:
        raise UsageError(f'Cannot read --params-json: {err}', 'params_json', 'JSON object or file') from err
    if not isinstance(doc, dict):
        raise UsageError('--params-json must hold a JSON object', 'params_json', 'JSON object')
    return doc


def _merge(doc: dict, **flags) -> dict:
    """ Flags given on the command line override the document. """
    merged = dict(doc)
    merged.update({k: v for k, v in flags.items() if v is not None})
    return merged


def _require(args, name: str, kind: str):
    if getattr(args, name) is None:
        raise PreconditionError(name, f'required for --kind {kind}', f'--{name} is required for --kind {kind}')
    return getattr(args, name)


def cmd_eval(args) -> int:
    """ One row per x for qw, rw, f or infinite. """
    doc = _merge(load_params_json(args.params_json), mu=args.mu, eps=args.eps, gamma=args.gamma, Omega=args.Omega)
    doc.setdefault('mu', -1.0)
    doc.setdefault('eps', 0.0)
    if 'nu' not in doc and 'gamma' not in doc:
        raise PreconditionError('gamma', 'required', '--gamma (or nu/gamma in --params-json) is required')
    params = GchParams.from_dict(doc)
    if not args.x:
        raise PreconditionError('x', 'at least one --x')
    gch = GchFunction(params)
    rows = []
    for x in args.x:
        if args.kind == 'f':
            z = gch.z_of(x)
            value = f_poly(_require(args, 'alpha0', 'f'), params.gamma, z)
            rows.append(dict(kind='f', x=x, z=z, value=value, eps0_part=value, eps1_part=0.0))
            continue
        if args.kind == 'qw':
            rst = gch.qw(TerminationSpec(_require(args, 'alpha0', 'qw'), _require(args, 'alpha1', 'qw')), x)
        elif args.kind == 'rw':
            rst = gch.rw(_require(args, 'psi0', 'rw'), _require(args, 'psi1', 'rw'), x)
        else:
            rst = gch.evaluate(x, SeriesMode.INFINITE, LambdaBranch(args.branch))
        rows.append(dict(kind=args.kind, x=x, z=rst.z, value=rst.value, eps0_part=rst.eps0_part,
                         eps1_part=rst.eps1_part, truncated_at=rst.truncated_at, last_term=rst.last_term))
    extra = {'params': {'mu': params.mu, 'eps': params.eps, 'nu': params.nu, 'Omega': params.big_omega}}
    _emit(args, render('eval', rows, EVAL_COLUMNS, args.format, extra))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    """ Sorted energy table. """
    doc = _merge(load_params_json(args.params_json), b=args.b, m=args.m)
    if 'b' not in doc:
        raise PreconditionError('b', 'required', '--b (or b in --params-json) is required')
    physics = PhysicsParams(doc.get('m', 0.0), doc['b'], doc.get('l', 0))
    for name in ('l_max', 'n_max', 'order_max'):
        if getattr(args, name) < 0:
            raise PreconditionError(name, f'{name} >= 0')
    entries = enumerate_spectrum(physics, args.order_max, args.n_max, range(args.l_max + 1))
    rows = [entry.as_dict() for entry in entries]
    extra = {'physics': {'m': physics.m, 'b': physics.b}}
    _emit(args, render('spectrum', rows, SPECTRUM_COLUMNS, args.format, extra))
    return EXIT_OK


def cmd_verify(args) -> int:
    """ Run suites; exit 1 only when a row fails. """
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    rows = []
    for name in names:
        kwargs = {'workers': args.workers}
        if args.eps is not None and name != 'spectrum':
            kwargs['eps'] = args.eps
        rows.extend(SUITES[name](**kwargs).run())
    docs = [row.as_dict() for row in rows]
    _emit(args, render('verify', docs, VERIFY_COLUMNS, args.format, {'summary': count_status(rows)}))
    return EXIT_FAIL if any(row.status == Status.FAIL for row in rows) else EXIT_OK


def cmd_classify(args) -> int:
    """ Regime of a raw equation as JSON. """
    doc = _merge(load_params_json(args.params_json), a0=args.a0, a1=args.a1, b1=args.b1, c1=args.c1,
                 d1=args.d1, branch=args.branch)
    missing = [name for name in ('a0', 'a1', 'b1', 'd1') if name not in doc]
    if missing:
        raise PreconditionError(missing[0], 'required', f'--{missing[0]} is required')
    branch = doc.get('branch', Branch.PLUS.value)
    if branch not in [b.value for b in Branch]:
        raise UsageError(f'branch={branch!r} is not plus or minus', 'branch', 'plus or minus')
    raw = RawOdeParams(doc['a0'], doc['a1'], doc['b1'], doc.get('c1', 0.0), doc['d1'], Branch(branch))
    result = classify(raw)
    out = {'schema_version': SCHEMA_VERSION, 'command': 'classify', 'result': result.as_dict()}
    if raw.a1 < 0:
        p = to_gch_params(raw)
        out['gch_params'] = {'mu': p.mu, 'eps': p.eps, 'nu': p.nu, 'omega': p.omega, 'Omega': p.big_omega}
    _emit(args, json.dumps(out, indent=2) + '\n')
    return EXIT_OK


def _emit(args, text: str):
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _env_workers() -> int:
    value = os.environ.get('GCH_WORKERS', '1')
    try:
        return int(value)
    except ValueError as err:
        raise UsageError(f'GCH_WORKERS={value!r} is not an integer', 'workers', 'integer >= 1') from err


def _common(parser: argparse.ArgumentParser, formats=('csv', 'json'), default='csv'):
    parser.add_argument('--format', choices=formats, default=default)
    parser.add_argument('--output', help='Write to this file instead of stdout')


def build_parser() -> GchArgumentParser:
    """ Parser for all subcommands. """
    parser = GchArgumentParser(prog='gch', description='Grand confluent hypergeometric functions.')
    parser.add_argument('--log-level', default=os.environ.get('GCH_LOG_LEVEL', 'WARNING'),
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    sub = parser.add_subparsers(dest='command', parser_class=GchArgumentParser)
    sub.required = True

    ev = sub.add_parser('eval', help='Evaluate a function at points x')
    ev.add_argument('--kind', choices=['qw', 'rw', 'f', 'infinite'], required=True)
    ev.add_argument('--alpha0', type=int)
    ev.add_argument('--alpha1', type=int)
    ev.add_argument('--psi0', type=int)
    ev.add_argument('--psi1', type=int)
    ev.add_argument('--gamma', type=float)
    ev.add_argument('--mu', type=float)
    ev.add_argument('--eps', type=float)
    ev.add_argument('--Omega', type=float)
    ev.add_argument('--branch', choices=[b.value for b in LambdaBranch], default=LambdaBranch.ROOT0.value)
    ev.add_argument('--x', type=float, action='append')
    ev.add_argument('--params-json')
    _common(ev)
    ev.set_defaults(handler=cmd_eval)

    sp = sub.add_parser('spectrum', help='Energy levels with hidden radial numbers')
    sp.add_argument('--b', type=float)
    sp.add_argument('--m', type=float)
    sp.add_argument('--l-max', type=int, default=0)
    sp.add_argument('--n-max', type=int, default=3)
    sp.add_argument('--order-max', type=int, default=0)
    sp.add_argument('--params-json')
    _common(sp)
    sp.set_defaults(handler=cmd_spectrum)

    ve = sub.add_parser('verify', help='Run verification suites')
    ve.add_argument('--suite', choices=sorted(SUITES) + ['all'], default='all')
    ve.add_argument('--eps', type=float)
    ve.add_argument('--workers', type=int, default=_env_workers())
    _common(ve)
    ve.set_defaults(handler=cmd_verify)

    cl = sub.add_parser('classify', help='Classify a raw equation')
    for name in ('a0', 'a1', 'b1', 'c1', 'd1'):
        cl.add_argument(f'--{name}', type=float)
    cl.add_argument('--branch', choices=[b.value for b in Branch])
    cl.add_argument('--params-json')
    _common(cl, formats=('json',), default='json')
    cl.set_defaults(handler=cmd_classify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """ Entry point; returns the exit code. """
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(stream=sys.stderr, level=args.log_level,
                            format='%(levelname)s:%(name)s:%(message)s')
        if getattr(args, 'workers', 1) < 1:
            raise PreconditionError('workers', 'workers >= 1')
        return args.handler(args)
    except GchError as err:
        sys.stderr.write(error_document(err))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
