"""
Line-oriented input documents.

A document has the sections ``[K]`` (rows of integers), ``[module]`` (a line
of divisors followed by rows of the rational Gram matrix, rationals written
``p/q``), ``[L]`` (rows of integers; an empty section is the empty link) and
``[options]`` (``key = value`` lines). Exactly one of ``[K]`` and
``[module]`` must be present. Lines starting with ``#`` are comments; a line
``%%`` separates documents in a manifest.

Example::

    [K]
    2 -1
    -1 2
    [L]
    0
    [options]
    precision = 256
"""
from collections import OrderedDict
from fractions import Fraction
import io
import logging
import os
import sys

from torcs.exactnum import MIN_PRECISION
from torcs.exceptions import InputFormatError, TorcsError
from torcs.intlinalg import as_int_matrix, check_symmetric
from torcs.quadmod import (FiniteQuadraticModule, check_level,
                           discriminant_module, DEFAULT_BUDGET)


__all__ = ['InputDocument', 'parse_document', 'parse_documents',
           'read_documents', 'documents_to_text', 'check_option',
           'OPTION_DEFAULTS', 'MANIFEST_PATH',
           'load_manifest']


log = logging.getLogger(__name__)

SEPARATOR = '%%'

SECTIONS = ('K', 'module', 'L', 'options')

OPTION_DEFAULTS = OrderedDict([('budget', DEFAULT_BUDGET),
                               ('precision', 256),
                               ('seed', 0),
                               ('strategy', 'reduced')])

STRATEGY_CHOICES = ('direct', 'reduced', 'null-separated')

MANIFEST_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                             'fixtures', 'manifest.txt')



def _parse_option(key, value, lineno):
    if key not in OPTION_DEFAULTS:
        raise InputFormatError('unknown option {0!r}'.format(key), lineno)
    if key == 'strategy':
        if value not in STRATEGY_CHOICES:
            raise InputFormatError('strategy must be one of {0}'
                                   .format(STRATEGY_CHOICES), lineno)
        return value
    try:
        v = int(value)
    except ValueError:
        raise InputFormatError('option {0} needs an integer, got {1!r}'
                               .format(key, value), lineno)
    return check_option(key, v, lineno)


def check_option(key, v, lineno=None):
    """
    Range checks of integer options.
    """
    if key == 'precision' and v < MIN_PRECISION:
        raise InputFormatError('precision must be at least {0} bits'
                               .format(MIN_PRECISION), lineno)
    if key == 'budget' and v < 1:
        raise InputFormatError('budget must be positive', lineno)
    if key == 'seed' and not 0 <= v < 2 ** 64:
        raise InputFormatError('seed must fit in 64 unsigned bits', lineno)
    return v



class InputDocument(object):
    """
    A quadratic datum, an optional linking matrix and options.

    :param K: Even nondegenerate level, as rows of integers.
    :type K: list of lists, optional

    :param L: Linking matrix; ``[]`` is the empty link, ``None`` absent.
    :type L: list of lists, optional

    :param module: ``(divisors, q_gram)`` of a user-specified module.
    :type module: tuple, optional

    :param options: ``precision``, ``budget``, ``strategy``, ``seed``.
    :type options: dict, optional

    :raises InputFormatError: if both or neither of `K` and `module` are
        given.
    """
    def __init__(self, K=None, L=None, module=None, options=None):
        if (K is None) == (module is None):
            raise InputFormatError('a document needs exactly one of [K] and '
                                   '[module]')
        self.K = [[int(x) for x in row] for row in K] if K is not None \
            else None
        self.L = [[int(x) for x in row] for row in L] if L is not None \
            else None
        if module is not None:
            divisors, q_gram = module
            module = ([int(d) for d in divisors],
                      [[Fraction(x) for x in row] for row in q_gram])
        self.module = module
        self.options = OrderedDict(sorted((options or {}).items()))

    def validate_datum(self):
        if self.K is not None:
            check_level(self.K)
        else:
            self.quadratic_module()

    def validate_link(self):
        if self.L is not None:
            check_symmetric(as_int_matrix(self.L, square=True),
                            'linking matrix')

    def validate(self):
        """
        Checks the quadratic datum and the linking matrix.

        :returns: `self`.
        """
        self.validate_datum()
        self.validate_link()
        return self

    def quadratic_module(self):
        """
        The :class:`FiniteQuadraticModule` of the datum.
        """
        if self.K is not None:
            return discriminant_module(self.K)
        divisors, q_gram = self.module
        return FiniteQuadraticModule(divisors, q_gram)

    def resolved(self, overrides=None):
        """
        Options with defaults below the document's ``[options]`` and those
        below `overrides` (entries that are None are ignored).
        """
        out = OrderedDict(OPTION_DEFAULTS)
        out.update(self.options)
        for key, value in (overrides or {}).items():
            if value is not None:
                out[key] = value
        return out

    def with_link(self, L):
        return InputDocument(self.K, L, self.module, self.options)

    def to_text(self):
        """
        Canonical text; :func:`parse_document` inverts it.
        """
        lines = []
        if self.K is not None:
            lines.append('[K]')
            lines.extend(' '.join(str(x) for x in row) for row in self.K)
        else:
            divisors, q_gram = self.module
            lines.append('[module]')
            lines.append(' '.join(str(d) for d in divisors))
            lines.extend(' '.join(str(x) for x in row) for row in q_gram)
        if self.L is not None:
            lines.append('[L]')
            lines.extend(' '.join(str(x) for x in row) for row in self.L)
        if self.options:
            lines.append('[options]')
            lines.extend('{0} = {1}'.format(k, v)
                         for k, v in self.options.items())
        return '\n'.join(lines) + '\n'

    def _key(self):
        return (self.K, self.L, self.module, list(self.options.items()))

    def __eq__(self, other):
        return isinstance(other, InputDocument) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'InputDocument(K={0}, L={1}, module={2}, options={3})'.format(
            self.K, self.L, self.module, dict(self.options))



def _int_row(line, lineno):
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise InputFormatError('expected integers, got {0!r}'.format(line),
                               lineno)


def _rational_row(line, lineno):
    try:
        return [Fraction(x) for x in line.split()]
    except (ValueError, ZeroDivisionError):
        raise InputFormatError('expected rationals p/q, got {0!r}'
                               .format(line), lineno)


def _checked(fn, lineno):
    try:
        fn()
    except InputFormatError:
        raise
    except (TorcsError, ValueError) as e:
        raise InputFormatError(str(e), lineno)


def parse_document(text, first_line=1, validate=True):
    """
    Parses a single document.

    :param first_line: Line number of the first line, for error messages.
    :type first_line: int, optional

    :param validate: If True, the level and the linking matrix are checked
        on load.
    :type validate: boolean, optional

    :raises InputFormatError: on malformed text. Invalid levels raise the
        errors of :func:`check_level`, re-raised as InputFormatError with
        the line of the section header.

    **Examples**

    >>> parse_document('[K]\\n2\\n[L]\\n3\\n').L
    [[3]]
    """
    rows = OrderedDict()
    headers = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), first_line):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if line.startswith('[') and line.endswith(']'):
            section = line[1:-1].strip()
            if section not in SECTIONS:
                raise InputFormatError('unknown section [{0}]'.format(section),
                                       lineno)
            if section in rows:
                raise InputFormatError('duplicate section [{0}]'
                                       .format(section), lineno)
            rows[section] = []
            headers[section] = lineno
            continue
        if section is None:
            raise InputFormatError('data before the first section', lineno)
        rows[section].append((lineno, line))

    K = L = module = None
    options = {}
    if 'K' in rows:
        K = [_int_row(line, n) for n, line in rows['K']]
        if not K:
            raise InputFormatError('[K] is empty', headers['K'])
    if 'module' in rows:
        body = rows['module']
        if not body:
            raise InputFormatError('[module] needs a divisor line',
                                   headers['module'])
        divisors = _int_row(body[0][1], body[0][0])
        q_gram = [_rational_row(line, n) for n, line in body[1:]]
        module = (divisors, q_gram)
    if 'L' in rows:
        L = [_int_row(line, n) for n, line in rows['L']]
    for lineno, line in rows.get('options', []):
        if '=' not in line:
            raise InputFormatError('expected key = value, got {0!r}'
                                   .format(line), lineno)
        key, value = [s.strip() for s in line.split('=', 1)]
        options[key] = _parse_option(key, value, lineno)

    if ('K' in rows) == ('module' in rows):
        raise InputFormatError('a document needs exactly one of [K] and '
                               '[module]', first_line)
    doc = InputDocument(K, L, module, options)
    if validate:
        datum = headers.get('K', headers.get('module'))
        _checked(doc.validate_datum, datum)
        if L is not None:
            _checked(doc.validate_link, headers['L'])
    return doc


def parse_documents(text, validate=True):
    """
    Parses a manifest of documents separated by ``%%`` lines.

    :returns: list of :class:`InputDocument`.
    """
    docs = []
    chunk, start = [], 1
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip() == SEPARATOR:
            if any(l.strip() and not l.strip().startswith('#') for l in chunk):
                docs.append(parse_document('\n'.join(chunk), start, validate))
            chunk, start = [], lineno + 1
        else:
            chunk.append(line)
    if any(l.strip() and not l.strip().startswith('#') for l in chunk):
        docs.append(parse_document('\n'.join(chunk), start, validate))
    if not docs:
        raise InputFormatError('no documents found', 1)
    return docs


def documents_to_text(docs):
    return (SEPARATOR + '\n').join(d.to_text() for d in docs)


def read_documents(path, encoding='utf8'):
    """
    Reads documents from a file path, ``'-'`` meaning standard input.
    """
    if path == '-':
        return parse_documents(sys.stdin.read())
    with io.open(path, mode='r', encoding=encoding) as f:
        return parse_documents(f.read())


def load_manifest():
    """
    The bundled acceptance manifest of ``(K, L)`` pairs.
    """
    return read_documents(MANIFEST_PATH)
