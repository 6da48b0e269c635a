"""
Command-line front end.

::

    torcs invariant FILE [--empty-link]
    torcs verify {equivalence,kirby,milgram,reciprocity,modular,weights} [FILE]
    torcs modular-data FILE
    torcs report-suite [--cases N]

Without FILE the bundled acceptance manifest is used. Options resolve as
built-in defaults, then the ``[options]`` section of each document, then
command-line flags. The exit status is nonzero iff a verdict failed or an
input was rejected.
"""
from __future__ import print_function

import argparse
from collections import OrderedDict
from fractions import Fraction
import logging
import sys

from torcs import __version__
from torcs.document import (read_documents, load_manifest, documents_to_text,
                            check_option, OPTION_DEFAULTS)
from torcs.exactnum import PhaseQ, phase_eval, approx_equal, Verdict
from torcs.exceptions import TorcsError, InputFormatError
from torcs.intlinalg import signature
from torcs.quadmod import anomaly_kappa, module_signature, milgram_check
from torcs.report import Report
from torcs.sampling import random_state, random_symmetric, random_moves
from torcs.suite import CRITERIA, SuiteRunner, build_cases, summarize
from torcs.surgery import (SurgeryPresentation, homology, rt_raw_invariant,
                           cs_raw_invariant, verify_closed_equivalence,
                           verify_kirby, reciprocity_check)
from torcs.tqft import (modular_relations_check, s_matrix, t_matrix,
                        closure_weight_consistency, lens_space_consistency)


__all__ = ['main', 'build_parser', 'cmd_invariant', 'cmd_verify',
           'cmd_modular_data', 'cmd_report_suite', 'VERIFY_CHOICES']


log = logging.getLogger(__name__)

VERIFY_CHOICES = ('equivalence', 'kirby', 'milgram', 'reciprocity',
                  'modular', 'weights')

DEFAULT_KIRBY_CASES = 100

KIRBY_MOVES = 6

_CASE_ERRORS = (TorcsError, ValueError, ArithmeticError)



def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--precision', type=int, default=None,
                        help='working precision in bits (default 256)')
    common.add_argument('--budget', type=int, default=None,
                        help='largest number of terms of a single sum')
    common.add_argument('--strategy', choices=('direct', 'reduced'),
                        default=None,
                        help='RT evaluation strategy (default reduced)')
    common.add_argument('--seed', type=int, default=None,
                        help='64-bit seed of randomized checks (default 0)')
    common.add_argument('--machine', action='store_true',
                        help='emit the report as JSON')
    common.add_argument('--n-proc', type=int, default=1, dest='n_proc',
                        help='worker processes for large sums and suites')
    common.add_argument('-v', '--verbose', action='store_true',
                        help='debug logging on stderr')

    parser = argparse.ArgumentParser(
        prog='torcs', description='Abelian Reshetikhin-Turaev and toral '
        'Chern-Simons invariants of 3-manifolds.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('invariant', parents=[common],
                       help='both raw invariants of (K, L)')
    p.add_argument('input', nargs='?', default=None)
    p.add_argument('--empty-link', action='store_true', dest='empty_link',
                   help='use the empty link when [L] is absent')

    p = sub.add_parser('verify', parents=[common], help='identity checks')
    p.add_argument('which', choices=VERIFY_CHOICES)
    p.add_argument('input', nargs='?', default=None)
    p.add_argument('--empty-link', action='store_true', dest='empty_link')
    p.add_argument('--cases', type=int, default=None,
                   help='random cases per document (kirby)')

    p = sub.add_parser('modular-data', parents=[common],
                       help='S, T, q-table and anomaly of a module')
    p.add_argument('input', nargs='?', default=None)

    p = sub.add_parser('report-suite', parents=[common],
                       help='run the acceptance suite')
    p.add_argument('--cases', type=int, default=None,
                   help='random cases per criterion')
    p.add_argument('--criteria', nargs='+', choices=list(CRITERIA),
                   default=None)
    return parser


def _overrides(args):
    out = {}
    for key in ('precision', 'budget', 'seed'):
        v = getattr(args, key, None)
        if v is not None:
            out[key] = check_option(key, v)
    if getattr(args, 'strategy', None) is not None:
        out['strategy'] = args.strategy
    return out


def _load(args):
    docs = read_documents(args.input) if args.input is not None \
        else load_manifest()
    if getattr(args, 'empty_link', False):
        docs = [d if d.L is not None else d.with_link([]) for d in docs]
    return docs


def _strategy(opts):
    return 'null-separated' if opts['strategy'] in ('reduced',
                                                    'null-separated') \
        else opts['strategy']


def _title(name, i, docs):
    return name if len(docs) == 1 else 'case {0} {1}'.format(i, name)


def _case(report, i, docs, opts):
    s = report.section(_title('options', i, docs))
    for key, value in opts.items():
        s.add(key, value)
    return opts


def _need_link(doc):
    if doc.L is None:
        raise InputFormatError('this command needs an [L] section '
                               '(or --empty-link)')


def _need_level(doc):
    if doc.K is None:
        raise InputFormatError('this command needs a lattice level [K]')


def _add_value(report, title, inv):
    s = report.section(title)
    s.add('value', inv.value)
    for key, value in sorted(inv.metadata().items()):
        s.add(key, value)
    return s



def cmd_invariant(docs, args, report):
    """
    Both raw invariants, the homology summary and the strategy metadata.
    """
    overrides = _overrides(args)
    n_proc = args.n_proc
    for i, doc in enumerate(docs):
        opts = _case(report, i, docs, doc.resolved(overrides))
        prec, budget = opts['precision'], opts['budget']
        try:
            _need_link(doc)
            M = doc.quadratic_module()
            P = SurgeryPresentation(doc.L)
            h = homology(P)
            s = report.section(_title('homology', i, docs))
            s.add('b1', h.b1)
            s.add('torsion', h.torsion_divisors or [1])
            s.add('torsion_order', h.torsion_order)
            s.add('m_M', h.m_M)
            s = report.section(_title('level', i, docs))
            s.add('divisors', list(M.divisors) or [1])
            s.add('order', M.order)
            s.add('signature', module_signature(M, prec, budget))
            rt = rt_raw_invariant(P, M, _strategy(opts), prec, budget,
                                  n_proc > 1, n_proc)
            _add_value(report, _title('rt', i, docs), rt)
            if doc.K is not None:
                cs = cs_raw_invariant(P, M, prec, budget, n_proc > 1, n_proc)
                _add_value(report, _title('cs', i, docs), cs)
                report.add_verdict(_title('agreement', i, docs),
                                   Verdict(*(_compare(rt, cs, prec))))
        except _CASE_ERRORS as e:
            report.add_error(e, case=i)
    return report


def _compare(a, b, prec):
    ok, residual = approx_equal(a.value, b.value, prec)
    return ok, residual, a, b


def _verify_kirby(report, i, docs, doc, opts, cases=None):
    prec, budget = opts['precision'], opts['budget']
    cases = DEFAULT_KIRBY_CASES if cases is None else cases
    rs = random_state(opts['seed'])
    M = doc.quadratic_module()
    worst, failed, errors = 0, [], 0
    for j in range(cases):
        L = doc.L if doc.L is not None else \
            random_symmetric(rs, int(rs.randint(1, 3)))
        moves = random_moves(rs, len(L), KIRBY_MOVES)
        try:
            v = verify_kirby(L, M, moves, prec, budget, _strategy(opts))
        except _CASE_ERRORS as e:
            report.add_error(e, case='{0}.{1}'.format(i, j))
            errors += 1
            continue
        worst = max(worst, v.residual)
        if not v.ok:
            failed.append(j)
    s = report.section(_title('kirby', i, docs))
    s.add('cases', cases)
    s.add('moves', KIRBY_MOVES)
    s.add('failed', len(failed))
    if failed:
        s.add('failed_cases', failed)
        report.failures.append(_title('kirby', i, docs))
    s.add('errors', errors)
    s.add('residual', worst)


def cmd_verify(docs, args, report):
    """
    Runs one family of identity checks on every document.
    """
    overrides = _overrides(args)
    which = args.which
    for i, doc in enumerate(docs):
        opts = _case(report, i, docs, doc.resolved(overrides))
        prec, budget = opts['precision'], opts['budget']
        title = _title(which, i, docs)
        try:
            if which == 'equivalence':
                _need_level(doc)
                _need_link(doc)
                v = verify_closed_equivalence(doc.L, doc.K, prec, budget,
                                              _strategy(opts),
                                              args.n_proc > 1, args.n_proc)
                report.add_verdict(title, v)
            elif which == 'kirby':
                _verify_kirby(report, i, docs, doc, opts, args.cases)
            elif which == 'milgram':
                _need_level(doc)
                report.add_verdict(title, milgram_check(doc.K, prec, budget))
            elif which == 'reciprocity':
                _need_level(doc)
                _need_link(doc)
                P = SurgeryPresentation(doc.L)
                s = report.add_verdict(
                    title, reciprocity_check(P.L_reg, doc.K, prec, budget))
                s.add('A', P.L_reg)
            elif which == 'modular':
                _modular_checks(report, i, docs, doc.quadratic_module(),
                                prec, budget)
            elif which == 'weights':
                _need_level(doc)
                _need_link(doc)
                P = SurgeryPresentation(doc.L)
                s = report.add_verdict(
                    title, closure_weight_consistency(P.L_reg, doc.K, prec,
                                                      budget))
                s.add('n', signature(P.L_reg).sigma)
                if P.m == 1:
                    report.add_verdict(
                        _title('lens', i, docs),
                        lens_space_consistency(P.L[0, 0], doc.K, prec,
                                               budget))
        except _CASE_ERRORS as e:
            report.add_error(e, case=i)
    return report


def _modular_checks(report, i, docs, M, prec, budget):
    r = modular_relations_check(M, prec, budget)
    s = report.section(_title('modular', i, docs))
    s.add('signature', r.signature)
    s.add('order', M.order)
    for name, v in r.checks:
        report.add_verdict(_title(name, i, docs), v)
    lit = report.section(_title('st_cubed_literal', i, docs))
    lit.add('holds', bool(r.st_cubed_literal.ok))
    lit.add('residual', r.st_cubed_literal.residual)
    lit.add('counted', 'no')
    return r


def cmd_modular_data(docs, args, report):
    """
    Divisors, q-table, S and T matrices, the anomaly constant and the
    residuals of the modular relations.
    """
    overrides = _overrides(args)
    for i, doc in enumerate(docs):
        opts = _case(report, i, docs, doc.resolved(overrides))
        prec, budget = opts['precision'], opts['budget']
        try:
            M = doc.quadratic_module()
            sig = module_signature(M, prec, budget)
            if doc.K is not None:
                kappa = anomaly_kappa(doc.K, prec, budget)
            else:
                kappa = phase_eval(PhaseQ(Fraction(-sig, 4)), prec)
            s = report.section(_title('module', i, docs))
            s.add('divisors', list(M.divisors) or [1])
            s.add('order', M.order)
            s.add('signature', sig)
            s.add('kappa', kappa)
            s.add('q', ['{0}: {1}'.format(tuple(a), q)
                        for a, q in M.q_table()])
            s.add('S', s_matrix(M, prec).to_rows())
            s.add('T', t_matrix(M, prec).to_rows())
            _modular_checks(report, i, docs, M, prec, budget)
        except _CASE_ERRORS as e:
            report.add_error(e, case=i)
    return report


def cmd_report_suite(args, report):
    """
    Runs the acceptance suite and summarizes it per criterion.
    """
    overrides = _overrides(args)
    opts = OrderedDict(OPTION_DEFAULTS)
    opts.update(overrides)
    cases = build_cases(opts['seed'], args.cases, args.criteria,
                        opts['precision'], opts['budget'])
    runner = SuiteRunner(cases, multiprocessing=args.n_proc > 1,
                         n_proc=args.n_proc)
    results = runner.run(verbose=sys.stderr.isatty() and not args.verbose)
    for name, summary in summarize(results).items():
        s = report.section(name)
        for key in ('cases', 'failed', 'skipped'):
            s.add(key, summary[key])
        if summary['max_residual'] is not None:
            s.add('max_residual', summary['max_residual'])
        if summary['failed']:
            report.failures.append(name)
    for r in results:
        if r.error is not None:
            s = report.section('error {0}[{1}]'.format(r.criterion, r.index))
            s.add('message', r.error)
    return report



def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else
                        logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')

    command = args.command
    if command == 'verify':
        command += ' ' + args.which
    report = Report(command)
    try:
        report.options.update(sorted(_overrides(args).items()))
        if args.command == 'report-suite':
            cmd_report_suite(args, report)
        else:
            docs = _load(args)
            report.echo = documents_to_text(docs)
            if args.command == 'invariant':
                cmd_invariant(docs, args, report)
            elif args.command == 'verify':
                cmd_verify(docs, args, report)
            else:
                cmd_modular_data(docs, args, report)
    except (InputFormatError, IOError) as e:
        report.add_error(e)

    if args.machine:
        print(report.to_json())
    else:
        sys.stdout.write(str(report))
    return 0 if report.ok else 1
