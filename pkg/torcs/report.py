"""
Plain-text and machine-readable reports of the command-line front end.

A report is a sequence of titled sections of ``key: value`` entries. Values
are formatted by :func:`format_entry`; complex scalars are written with
precision/4 significant digits so that identical input and seed give an
identical report, byte for byte.
"""
from collections import OrderedDict
from fractions import Fraction
import json
import numbers

import mpmath
from mpmath.ctx_mp_python import _mpf, _mpc
import numpy as np

from torcs.exactnum import ComplexApprox, PhaseQ, Verdict


__all__ = ['Report', 'ReportSection', 'format_entry', 'format_residual',
           'ECHO_BEGIN', 'ECHO_END', 'extract_echo']


ECHO_BEGIN = '--- input ---'
ECHO_END = '--- end input ---'

_RESIDUAL_DIGITS = 5



def format_residual(x):
    """
    Residuals are printed with five significant digits.
    """
    return mpmath.nstr(x, _RESIDUAL_DIGITS)


def format_entry(x, digits=None):
    """
    Formats a single report value as a string (or a list of strings for
    matrices and tuples in machine form).

    :param x: ComplexApprox, PhaseQ, Fraction, int, bool, string, numpy
        array, list or tuple.

    :param digits: Significant digits of complex scalars. Defaults to the
        precision/4 rule of :meth:`ComplexApprox.digits`.
    :type digits: int, optional

    **Examples**

    >>> format_entry(Fraction(-1, 2))
    '-1/2'
    >>> format_entry(True)
    'pass'
    """
    if isinstance(x, ComplexApprox):
        return x.to_string(digits)
    if hasattr(x, 'value') and isinstance(x.value, ComplexApprox):
        return x.value.to_string(digits)
    if isinstance(x, bool):
        return 'pass' if x else 'fail'
    if isinstance(x, PhaseQ):
        return 'exp(i*pi*{0})'.format(x)
    if isinstance(x, (Fraction, numbers.Integral)):
        return str(x)
    if isinstance(x, np.ndarray):
        return [' '.join(str(c) for c in row) for row in x.tolist()] \
            if x.ndim == 2 else ' '.join(str(c) for c in x.tolist())
    if isinstance(x, (_mpf, _mpc)):
        return format_residual(x)
    if isinstance(x, list) and x and \
            all(isinstance(r, (list, tuple)) for r in x):
        return ['  '.join(format_entry(c, digits) for c in r) for r in x]
    if isinstance(x, (list, tuple)):
        return ', '.join(format_entry(c, digits) for c in x)
    return str(x)



class ReportSection(list):
    """
    A titled list of ``(key, value)`` entries, values already formatted.
    """
    def __init__(self, title, entries=()):
        super(ReportSection, self).__init__(entries)
        self.title = title

    def add(self, key, value, digits=None):
        self.append((key, format_entry(value, digits)))
        return self

    def __str__(self):
        width = max([len(k) for k, _ in self] + [0]) + 2
        out = '[{0}]\n'.format(self.title)
        for key, value in self:
            if isinstance(value, list):
                out += '{0}\n'.format(key + ':')
                for row in value:
                    out += '    {0}\n'.format(row)
            else:
                out += '{0:<{1}}{2}\n'.format(key + ':', width, value)
        return out



class Report(object):
    """
    The outcome of one command on one input document.

    :param command: Command line echo, e.g. ``'verify milgram'``.
    :type command: string

    :param echo: Canonical text of the input document. It re-parses to the
        same :class:`InputDocument`.
    :type echo: string

    :param options: Resolved options.
    :type options: dict

    :attributes:
        * **sections** (list of ReportSection)
        * **failures** (list of string)
            Names of failed verdicts.
        * **errors** (list of string)
            Validation or evaluation errors.
    """
    def __init__(self, command, echo='', options=None, digits=None):
        self.command = command
        self.echo = echo
        self.options = OrderedDict(sorted((options or {}).items()))
        self.digits = digits
        self.sections = []
        self.failures = []
        self.errors = []

    def section(self, title):
        s = ReportSection(title)
        self.sections.append(s)
        return s

    def add_verdict(self, name, verdict, section=None):
        """
        Records a :class:`Verdict` (or anything with `ok` and `residual`).
        Scalar sides are printed as well.
        """
        s = section if section is not None else self.section(name)
        s.add('ok', bool(verdict.ok))
        s.add('residual', verdict.residual)
        if isinstance(verdict, Verdict):
            for side in ('lhs', 'rhs'):
                v = getattr(verdict, side)
                if isinstance(v, ComplexApprox) or hasattr(v, 'metadata'):
                    s.add(side, v, self.digits)
        if not verdict.ok:
            self.failures.append(name)
        return s

    def add_error(self, exc, case=None):
        s = self.section('error' if case is None else 'error {0}'.format(case))
        s.add('type', type(exc).__name__)
        s.add('message', str(exc))
        if getattr(exc, 'lineno', None) is not None:
            s.add('line', exc.lineno)
        self.errors.append(type(exc).__name__)
        return s

    @property
    def ok(self):
        return not self.failures and not self.errors

    def __str__(self):
        out = 'command: {0}\n'.format(self.command)
        for key, value in self.options.items():
            out += 'option.{0}: {1}\n'.format(key, value)
        if self.echo:
            out += ECHO_BEGIN + '\n' + self.echo.rstrip('\n') + '\n' + \
                ECHO_END + '\n'
        for s in self.sections:
            out += str(s)
        out += 'status: {0}\n'.format('pass' if self.ok else 'fail')
        return out

    def to_dict(self):
        d = OrderedDict()
        d['command'] = self.command
        d['options'] = self.options
        d['input'] = self.echo
        d['sections'] = [OrderedDict([('title', s.title),
                                      ('entries', OrderedDict(s))])
                         for s in self.sections]
        d['failures'] = list(self.failures)
        d['errors'] = list(self.errors)
        d['status'] = 'pass' if self.ok else 'fail'
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)



def extract_echo(text):
    """
    The echoed input document of a text or JSON report.
    """
    text = text.strip()
    if text.startswith('{'):
        return json.loads(text)['input']
    lines = text.splitlines()
    try:
        start = lines.index(ECHO_BEGIN)
        stop = lines.index(ECHO_END, start)
    except ValueError:
        raise ValueError('report carries no echoed input')
    return '\n'.join(lines[start + 1:stop]) + '\n'
