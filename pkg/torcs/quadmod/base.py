"""
Finite quadratic modules.

A module is a finite abelian group ``Z/d_1 + ... + Z/d_r`` together with a
symmetric rational matrix `q_gram`; the quadratic form is
``q(x) = exp(i*pi * x^T q_gram x)`` on integer representatives. Values are
kept as exponents modulo 2 (:class:`torcs.exactnum.PhaseQ`).
"""
from fractions import Fraction
from functools import reduce
import itertools
import logging
import operator

try:
    from math import gcd
except ImportError:
    from fractions import gcd

import numpy as np

from torcs.exactnum import PhaseQ
from torcs.exceptions import (DegenerateModuleError, IllDefinedFormError,
                              ElementRangeError, DimensionMismatchError)
from torcs.intlinalg import as_rational_matrix, zeros, check_symmetric


__all__ = ['FiniteQuadraticModule', 'GroupElement', 'cyclic_module',
           'q_value', 'bicharacter', 'nondegeneracy_radical',
           'orthogonal_sum', 'q_table', 'scaled_gram', 'box_elements',
           'quadratic_residues']


log = logging.getLogger(__name__)

CHUNK_SIZE = 1 << 16



class GroupElement(tuple):
    """
    Coordinates of an element of ``Z/d_1 + ... + Z/d_r``.
    """
    __slots__ = ()

    def __new__(cls, coords=()):
        return super(GroupElement, cls).__new__(cls, (int(c) for c in coords))

    def __repr__(self):
        return 'GroupElement({0})'.format(tuple(self))



def scaled_gram(Q):
    """
    Clears denominators of a rational Gram matrix.

    :returns: ``(P, den)`` with `P` an integer object array and
        ``Q = P / den``, `den` the least common denominator.
    """
    rows = np.asarray(Q).tolist()
    den = reduce(lambda a, b: a * b // gcd(a, b),
                 [Fraction(x).denominator for r in rows for x in r], 1)
    P = zeros(len(rows), len(rows[0]) if rows else 0)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            P[i, j] = int(Fraction(x) * den)
    return P, den


def box_elements(divisors, start, stop):
    """
    Coordinates of elements ``start, ..., stop-1`` of the box
    ``prod(range(d_i))`` in odometer order, last coordinate fastest.

    :returns: integer array of shape ``(stop - start, r)``.
    """
    idx = np.arange(start, stop, dtype=np.int64)
    if not divisors:
        return np.zeros((len(idx), 0), dtype=np.int64)
    return np.stack(np.unravel_index(idx, tuple(divisors)), axis=1) \
             .astype(np.int64)


def quadratic_residues(Y, P, modulus):
    """
    ``y^T P y mod modulus`` for every row `y` of `Y`.

    `P` is reduced modulo `modulus` first, which does not change the
    residues; int64 arithmetic is used when the products provably fit,
    Python ints otherwise.
    """
    r = P.shape[0]
    if r == 0:
        return np.zeros(Y.shape[0], dtype=np.int64)
    Pm = np.array([[int(x) % modulus for x in row] for row in P.tolist()],
                  dtype=object)
    ymax = int(Y.max()) if Y.size else 0
    if r * r * (ymax + 1) ** 2 * modulus < (1 << 62):
        Pi = Pm.astype(np.int64)
        return (Y.dot(Pi) * Y).sum(axis=1) % modulus
    Yo = Y.astype(object)
    vals = (Yo.dot(Pm) * Yo).sum(axis=1)
    return np.array([int(v) % modulus for v in vals], dtype=object)



class FiniteQuadraticModule(object):
    """
    A finite abelian group with a rational quadratic form valued modulo 2.

    Trivial factors ``d_i = 1`` are dropped together with the matching rows
    and columns of `q_gram`. Construction validates that the form is well
    defined on the group and, unless ``check_nondegenerate=False``, that the
    bicharacter has trivial radical.

    :param divisors: Orders of the cyclic factors, each at least 1.
    :type divisors: list of int

    :param q_gram: Symmetric rational matrix; ``q(x) = x^T q_gram x mod 2``.
    :type q_gram: array-like of Fractions, ints or 'p/q' strings

    :param provenance: ``'user'`` or ``'lattice'``.
    :type provenance: string, optional

    :param lattice: Discriminant data when the module comes from a lattice.
    :type lattice: LatticeDiscriminantData, optional

    **Examples**

    >>> M = FiniteQuadraticModule([4], [['1/4']])
    >>> M.q_value((1,))
    PhaseQ(1/4)
    """
    def __init__(self, divisors, q_gram, provenance='user', lattice=None,
                 check_nondegenerate=True):
        divisors = [int(d) for d in divisors]
        if any(d < 1 for d in divisors):
            raise ValueError('divisors must be positive, got {0}'
                             .format(divisors))
        Q = as_rational_matrix(q_gram) if len(divisors) else zeros(0)
        if Q.shape != (len(divisors), len(divisors)):
            raise DimensionMismatchError(
                'q_gram must be {0}x{0}, got {1}'.format(len(divisors),
                                                         Q.shape))
        check_symmetric(Q, 'q_gram')
        keep = [i for i, d in enumerate(divisors) if d > 1]
        self.divisors = tuple(divisors[i] for i in keep)
        self.q_gram = Q[np.ix_(keep, keep)] if keep else zeros(0)
        self.provenance = provenance
        self.lattice = lattice
        self.P, self.den = scaled_gram(self.q_gram)
        self._signature = {}
        self._check_well_defined()
        if check_nondegenerate:
            radical = self.radical()
            if len(radical) > 1:
                raise DegenerateModuleError(radical)

    def _check_well_defined(self):
        for i, d in enumerate(self.divisors):
            for j in range(self.rank):
                if (d * self.q_gram[i, j]).denominator != 1:
                    raise IllDefinedFormError(
                        'q_gram[{0}][{1}] = {2} is not compatible with '
                        'Z/{3}'.format(i, j, self.q_gram[i, j], d))
            v = d * d * self.q_gram[i, i]
            if v.denominator != 1 or v.numerator % 2:
                raise IllDefinedFormError(
                    'shifting coordinate {0} by {1} changes q by {2}, '
                    'not an even integer'.format(i, d, v))

    @property
    def rank(self):
        return len(self.divisors)

    @property
    def order(self):
        return reduce(operator.mul, self.divisors, 1)

    def __len__(self):
        return self.order

    @property
    def exponent(self):
        return reduce(lambda a, b: a * b // gcd(a, b), self.divisors, 1)

    def __repr__(self):
        return 'FiniteQuadraticModule(divisors={0}, provenance={1!r})' \
            .format(list(self.divisors), self.provenance)

    def check_element(self, a):
        a = GroupElement(a)
        if len(a) != self.rank:
            raise DimensionMismatchError(
                'element has {0} coordinates, group has rank {1}'
                .format(len(a), self.rank))
        for i, (c, d) in enumerate(zip(a, self.divisors)):
            if not 0 <= c < d:
                raise ElementRangeError(
                    'coordinate {0} of {1} is outside [0, {2})'
                    .format(i, tuple(a), d))
        return a

    def reduce(self, x):
        """
        Reduces arbitrary integer coordinates into the canonical range.
        """
        return GroupElement(int(c) % d for c, d in zip(x, self.divisors))

    def zero(self):
        return GroupElement((0,) * self.rank)

    def add(self, a, b):
        return self.reduce(x + y for x, y in zip(a, b))

    def neg(self, a):
        return self.reduce(-x for x in a)

    def scale(self, a, n):
        return self.reduce(n * x for x in a)

    def elements(self):
        """
        All elements in odometer order, last coordinate fastest.
        """
        for c in itertools.product(*[range(d) for d in self.divisors]):
            yield GroupElement(c)

    def index_of(self, a):
        a = self.check_element(a)
        idx = 0
        for c, d in zip(a, self.divisors):
            idx = idx * d + c
        return idx

    def element_at(self, idx):
        if not 0 <= idx < self.order:
            raise ElementRangeError('index {0} outside [0, {1})'
                                    .format(idx, self.order))
        out = []
        for d in reversed(self.divisors):
            idx, c = divmod(idx, d)
            out.append(c)
        return GroupElement(reversed(out))

    def _form(self, x, y):
        return sum(self.q_gram[i, j] * x[i] * y[j]
                   for i in range(self.rank) for j in range(self.rank))

    def q_value(self, a):
        """
        ``x^T q_gram x mod 2`` on the canonical representative of `a`.
        """
        a = self.check_element(a)
        return PhaseQ(self._form(a, a))

    def bicharacter(self, a, b):
        """
        ``q(a+b) - q(a) - q(b) mod 2``.
        """
        a, b = self.check_element(a), self.check_element(b)
        return PhaseQ(2 * self._form(a, b))

    def q_table(self):
        return [(a, self.q_value(a)) for a in self.elements()]

    def radical(self):
        """
        Elements `x` with ``b(x, y) = 0`` for every `y`, i.e. with
        ``q_gram x`` integral. Found by exhaustive vectorized scan.
        """
        if self.rank == 0:
            return [self.zero()]
        out = []
        for a in range(0, self.order, CHUNK_SIZE):
            b = min(self.order, a + CHUNK_SIZE)
            Y = box_elements(self.divisors, a, b).astype(object)
            R = Y.dot(self.P.T)
            hit = np.all((R % self.den == 0).astype(bool), axis=1)
            out.extend(GroupElement(y) for y in Y[hit].tolist())
        return out

    def is_modular(self):
        return len(self.radical()) == 1

    def same_values(self, other):
        """
        True iff both modules have the same divisors and agree on every
        q-value.
        """
        if self.divisors != other.divisors:
            return False
        return all(self.q_value(a) == other.q_value(a)
                   for a in self.elements())



def cyclic_module(k):
    """
    ``Z/k`` with ``q(x) = x^2 / k`` for even positive `k`.

    **Examples**

    >>> [cyclic_module(4).q_value((x,)) for x in range(4)]
    [PhaseQ(0), PhaseQ(1/4), PhaseQ(1), PhaseQ(1/4)]
    """
    k = int(k)
    if k <= 0 or k % 2:
        raise ValueError('cyclic module needs an even positive level, got {0}'
                         .format(k))
    return FiniteQuadraticModule([k], [[Fraction(1, k)]], provenance='cyclic')


def q_value(M, a):
    return M.q_value(a)


def bicharacter(M, a, b):
    return M.bicharacter(a, b)


def nondegeneracy_radical(M):
    """
    Nonzero part of the radical of the bicharacter; an empty list certifies
    that the pointed category of `M` is modular.
    """
    zero = M.zero()
    return [x for x in M.radical() if x != zero]


def q_table(M):
    return M.q_table()


def orthogonal_sum(M1, M2):
    """
    Orthogonal direct sum; the Gauss sums of the summands multiply.
    """
    r1, r2 = M1.rank, M2.rank
    Q = zeros(r1 + r2)
    Q[:r1, :r1] = M1.q_gram
    Q[r1:, r1:] = M2.q_gram
    return FiniteQuadraticModule(list(M1.divisors) + list(M2.divisors), Q)
