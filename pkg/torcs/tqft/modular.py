"""
Modular data of the pointed category of a finite quadratic module: state
spaces, the S and T operators, the Hopf pairing and the cylinder scalar.
"""
from collections import namedtuple
from fractions import Fraction
import itertools
import logging

from torcs.exactnum import (DEFAULT_PRECISION, ComplexApprox, PhaseQ,
                            get_context, phase_eval, real_power, tolerance,
                            Verdict)
from torcs.quadmod import module_signature, DEFAULT_BUDGET
from torcs.surgery.invariants import level_module


__all__ = ['StateSpace', 'OperatorMatrix', 'ModularReport', 's_matrix',
           't_matrix', 'charge_conjugation', 'hopf_pairing', 'hopf_matrix',
           'modular_relations_check', 'genus_g_dimension', 'cylinder_scalar']


log = logging.getLogger(__name__)



class StateSpace(object):
    """
    The genus-`g` state space, with preferred basis indexed by ``G^g``.

    :param M: Finite quadratic module (or an even level `K`).
    :param g: Genus, at least 0.
    """
    def __init__(self, M, g=1):
        if g < 0:
            raise ValueError('genus must be nonnegative')
        self.module = level_module(M)
        self.g = int(g)

    @property
    def dimension(self):
        return self.module.order ** self.g

    def __len__(self):
        return self.dimension

    def labels(self):
        """
        Basis labels, tuples of `g` group elements, in odometer order.
        """
        return itertools.product(list(self.module.elements()), repeat=self.g)

    def index_of(self, label):
        idx = 0
        for a in label:
            idx = idx * self.module.order + self.module.index_of(a)
        return idx



class OperatorMatrix(object):
    """
    A square matrix of complex numbers acting on a state space, stored as an
    :mod:`mpmath` matrix of the context at `prec` bits.
    """
    def __init__(self, matrix, space, prec=DEFAULT_PRECISION):
        self.matrix = matrix
        self.space = space
        self.prec = prec
        if matrix.rows != matrix.cols or matrix.rows != space.dimension:
            raise ValueError('operator of size {0}x{1} on a space of '
                             'dimension {2}'.format(matrix.rows, matrix.cols,
                                                    space.dimension))

    @property
    def ctx(self):
        return get_context(self.prec)

    @property
    def size(self):
        return self.matrix.rows

    def entry(self, i, j):
        """
        Entry by integer index or by basis label.
        """
        if not isinstance(i, int):
            i = self.space.index_of(i)
        if not isinstance(j, int):
            j = self.space.index_of(j)
        return ComplexApprox(self.matrix[i, j], self.prec)

    def __getitem__(self, ij):
        return self.entry(*ij)

    def _new(self, matrix):
        return OperatorMatrix(matrix, self.space, self.prec)

    def dot(self, other):
        return self._new(self.matrix * other.matrix)

    def __mul__(self, scalar):
        if isinstance(scalar, ComplexApprox):
            scalar = scalar.value
        return self._new(self.matrix * scalar)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = self.ctx.eye(self.size)
        for _ in range(n):
            out = out * self.matrix
        return self._new(out)

    def adjoint(self):
        return self._new(self.matrix.H)

    def transpose(self):
        return self._new(self.matrix.T)

    def max_deviation(self, other):
        """
        Largest absolute entrywise difference.
        """
        d = self.matrix - other.matrix
        worst = self.ctx.mpf(0)
        for i in range(self.size):
            for j in range(self.size):
                worst = max(worst, abs(d[i, j]))
        return worst

    def compare(self, other):
        """
        :returns: :class:`Verdict` comparing two operators entrywise.
        """
        residual = self.max_deviation(other)
        ok = residual <= tolerance(self.prec) * max(1, self.size)
        return Verdict(ok, residual, self, other)

    def identity(self):
        return self._new(self.ctx.eye(self.size))

    def to_rows(self, digits=None):
        return [[self.entry(i, j).to_string(digits) for j in range(self.size)]
                for i in range(self.size)]



def _operator(M, fn, prec):
    space = StateSpace(M, 1)
    ctx = get_context(prec)
    elements = list(space.module.elements())
    A = ctx.matrix(len(elements), len(elements))
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            v = fn(i, a, j, b)
            if v is not None:
                A[i, j] = v
    return OperatorMatrix(A, space, prec)


def s_matrix(M, prec=DEFAULT_PRECISION, sign=1):
    """
    The normalized S operator ``S[a][b] = |G|^{-1/2} b(a, b)^sign``.

    The plus sign is the default; ``sign=-1`` gives the adjoint.

    **Examples**

    >>> s_matrix([[2]]).to_rows(5)
    [['0.70711+0.0j', '0.70711+0.0j'], ['0.70711+0.0j', '-0.70711+0.0j']]
    """
    if sign not in (1, -1):
        raise ValueError('sign must be +1 or -1')
    M = level_module(M)
    norm = real_power(M.order, Fraction(-1, 2), prec).value
    return _operator(M, lambda i, a, j, b: norm * phase_eval(
        M.bicharacter(a, b) * sign, prec).value, prec)


def t_matrix(M, prec=DEFAULT_PRECISION):
    """
    The diagonal twist operator ``T[a][a] = q(a)``.
    """
    M = level_module(M)
    return _operator(M, lambda i, a, j, b: phase_eval(M.q_value(a), prec).value
                     if i == j else None, prec)


def charge_conjugation(M, prec=DEFAULT_PRECISION):
    """
    Permutation operator of ``a -> -a``.
    """
    M = level_module(M)
    return _operator(M, lambda i, a, j, b: 1 if M.neg(a) == b else None, prec)


def hopf_pairing(M, a, b):
    """
    Value of the Hopf link colored by `a` and `b`, which is the
    bicharacter ``b(a, b)``.
    """
    return level_module(M).bicharacter(a, b)


def hopf_matrix(M, prec=DEFAULT_PRECISION):
    """
    The unnormalized pairing matrix ``|G|^{1/2} S``.
    """
    M = level_module(M)
    return _operator(M, lambda i, a, j, b: phase_eval(
        hopf_pairing(M, a, b), prec).value, prec)


class ModularReport(namedtuple('ModularReport',
                                'signature s_symmetric s_unitary s_squared '
                                'st_cubed st_inverse_cubed st_cubed_literal')):
    """
    Verdicts of :func:`modular_relations_check`. `st_cubed_literal` is
    informational and does not count towards `ok`.
    """
    __slots__ = ()

    CHECKS = ('s_symmetric', 's_unitary', 's_squared', 'st_cubed',
              'st_inverse_cubed')

    @property
    def checks(self):
        return [(name, getattr(self, name)) for name in self.CHECKS]

    @property
    def ok(self):
        return all(v.ok for _, v in self.checks)


def modular_relations_check(M, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET):
    """
    Verifies the modular relations of ``(S, T)``.

    With ``s`` the signature of `M` modulo 8 the checks are: `S` symmetric,
    `S` unitary, ``S^2 = C`` (charge conjugation),
    ``(S^dagger T)^3 = exp(i*pi*s/4) S^2`` and the equivalent
    ``(S T^{-1})^3 = exp(-i*pi*s/4) S^2``.

    The relation ``(S T)^3 = exp(i*pi*s/4) S^2`` written with the plus-sign
    `S` of :func:`s_matrix` is evaluated as well and kept in
    `st_cubed_literal`. It holds when `S` is real and fails in general
    (for instance for the cyclic level ``[[4]]``), since it is the
    relation of the modular S-operator ``S^dagger``.

    :returns: :class:`ModularReport`; its `ok` property is True iff every
        check passed.
    """
    M = level_module(M)
    s = module_signature(M, prec, budget)
    S = s_matrix(M, prec)
    T = t_matrix(M, prec)
    C = charge_conjugation(M, prec)
    S2 = S.dot(S)
    phase = phase_eval(PhaseQ(Fraction(s, 4)), prec)
    report = ModularReport(
        s,
        S.compare(S.transpose()),
        S.dot(S.adjoint()).compare(S.identity()),
        S2.compare(C),
        (S.adjoint().dot(T) ** 3).compare(S2 * phase),
        (S.dot(T.adjoint()) ** 3).compare(S2 * phase.conjugate()),
        (S.dot(T) ** 3).compare(S2 * phase))
    if not report.ok:
        log.warning('modular relations fail for %r', M)
    elif not report.st_cubed_literal.ok:
        log.debug('(S T)^3 with the plus-sign S is off by %s',
                  report.st_cubed_literal.residual)
    return report


def genus_g_dimension(K, g):
    """
    ``|det K|^g``, the dimension of the genus-`g` state space.
    """
    if g < 0:
        raise ValueError('genus must be nonnegative')
    return level_module(K).order ** int(g)


def cylinder_scalar(K, g, prec=DEFAULT_PRECISION):
    """
    The multiple of the identity by which the cylinder over a genus-`g`
    surface acts: ``|det K|^{g/2}``.
    """
    if g < 0:
        raise ValueError('genus must be nonnegative')
    return real_power(level_module(K).order, Fraction(int(g), 2), prec)
