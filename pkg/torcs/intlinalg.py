"""
Exact integer and rational linear algebra.

Matrices are NumPy arrays of ``dtype=object`` whose entries are Python
``int`` (or ``fractions.Fraction`` for rational matrices), so the usual array
slicing applies while no entry ever overflows a machine word.
"""
from collections import namedtuple
from fractions import Fraction
from functools import reduce
import logging
import numbers

try:
    from math import gcd
except ImportError:
    from fractions import gcd

import numpy as np

from torcs.exceptions import DimensionMismatchError, NotSymmetricError


__all__ = ['SmithDecomposition', 'BlockSplit', 'SignatureTriple',
           'as_int_matrix', 'as_rational_matrix', 'identity', 'zeros',
           'is_symmetric', 'check_symmetric', 'determinant',
           'rational_inverse', 'integer_inverse', 'smith_normal_form',
           'signature', 'block_split', 'is_even', 'kronecker',
           'direct_sum', 'congruence', 'elementary_matrix', 'matrix_rows',
           'row_basis']


log = logging.getLogger(__name__)



class SmithDecomposition(namedtuple('SmithDecomposition', 'U D V')):
    """
    ``U * M * V = D`` with `U`, `V` unimodular and `D` diagonal, its
    diagonal a nonnegative divisibility chain.
    """
    __slots__ = ()

    @property
    def divisors(self):
        """
        The diagonal of `D` as a list of ints.
        """
        k = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(k)]

    @property
    def rank(self):
        return sum(1 for d in self.divisors if d != 0)


class BlockSplit(namedtuple('BlockSplit', 'U L_reg rank nullity')):
    """
    ``U^T * L * U = diag(L_reg, 0)`` with `U` unimodular and `L_reg`
    nondegenerate of size `rank`.
    """
    __slots__ = ()


class SignatureTriple(namedtuple('SignatureTriple',
                                 'n_plus n_minus n_zero')):
    __slots__ = ()

    @property
    def sigma(self):
        return self.n_plus - self.n_minus

    @property
    def dimension(self):
        return self.n_plus + self.n_minus + self.n_zero



def _to_int(x):
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, (float, np.floating)) and float(x).is_integer():
        return int(x)
    raise ValueError('{0!r} is not an integer'.format(x))


def zeros(m, n=None, dtype=object):
    n = m if n is None else n
    out = np.empty((m, n), dtype=dtype)
    out.fill(0)
    return out


def identity(n):
    out = zeros(n)
    for i in range(n):
        out[i, i] = 1
    return out


def as_int_matrix(M, square=False):
    """
    Converts nested sequences or arrays to a 2-d object array of Python
    ints.

    :param M: Rows of integers. ``[]`` gives the 0x0 matrix.
    :type M: sequence or array

    :param square: If True, reject non-square input.
    :type square: boolean, optional

    :returns: 2-d numpy array with ``dtype=object``.
    """
    if isinstance(M, np.ndarray) and M.ndim == 2:
        rows = M.tolist()
    else:
        rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError('ragged matrix rows')
    if square and m != n:
        raise DimensionMismatchError('expected a square matrix, got {0}x{1}'
                                     .format(m, n))
    out = zeros(m, n)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = _to_int(x)
    return out


def as_rational_matrix(M):
    if isinstance(M, np.ndarray) and M.ndim == 2:
        rows = M.tolist()
    else:
        rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    out = zeros(m, n)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise DimensionMismatchError('ragged matrix rows')
        for j, x in enumerate(r):
            out[i, j] = Fraction(x) if not isinstance(x, str) \
                else Fraction(x.strip())
    return out


def matrix_rows(M):
    """
    Plain nested lists of ints (or Fractions), for reports and hashing.
    """
    return [[x for x in row] for row in np.asarray(M).tolist()]


def is_symmetric(M):
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    n = M.shape[0]
    return all(M[i, j] == M[j, i] for i in range(n) for j in range(i + 1, n))


def check_symmetric(M, name='matrix'):
    if not is_symmetric(M):
        raise NotSymmetricError('{0} is not symmetric'.format(name))


def determinant(M):
    """
    Exact determinant by fraction-free (Bareiss) elimination. The empty
    matrix has determinant 1.
    """
    A = [list(r) for r in as_int_matrix(M, square=True).tolist()]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def rational_inverse(M):
    """
    Inverse over the rationals by Gauss-Jordan elimination.

    :raises ValueError: if `M` is singular.
    """
    M = np.asarray(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise DimensionMismatchError('only square matrices are invertible')
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M.tolist())]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise ValueError('matrix is singular')
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    out = zeros(n)
    for i in range(n):
        for j in range(n):
            out[i, j] = A[i][n + j]
    return out


def integer_inverse(U):
    """
    Inverse of a unimodular integer matrix, as an integer matrix.
    """
    inv = rational_inverse(U)
    try:
        return as_int_matrix(inv)
    except ValueError:
        raise ValueError('matrix is not unimodular')


def _min_pivot(A, t):
    best = None
    m, n = A.shape
    for i in range(t, m):
        for j in range(t, n):
            a = A[i, j]
            if a != 0 and (best is None or abs(a) < best[0]):
                best = (abs(a), i, j)
    return best


def smith_normal_form(M):
    """
    Smith normal form of an arbitrary integer matrix.

    The pivot at each stage is the entry of minimal nonzero absolute value
    of the remaining submatrix, scanned row by row, so the decomposition is
    deterministic.

    :param M: Integer matrix, any shape.
    :type M: array-like

    :returns: :class:`SmithDecomposition` with ``U * M * V = D``.

    **Examples**

    >>> smith_normal_form([[2, 1], [1, 2]]).divisors
    [1, 3]
    """
    A = as_int_matrix(M)
    m, n = A.shape
    U, V = identity(m), identity(n)
    t = 0
    while t < min(m, n):
        best = _min_pivot(A, t)
        if best is None:
            break
        _, i, j = best
        if i != t:
            A[[t, i], :] = A[[i, t], :]
            U[[t, i], :] = U[[i, t], :]
        if j != t:
            A[:, [t, j]] = A[:, [j, t]]
            V[:, [t, j]] = V[:, [j, t]]
        p = A[t, t]
        for i in range(t + 1, m):
            q = A[i, t] // p
            if q:
                A[i, :] = A[i, :] - q * A[t, :]
                U[i, :] = U[i, :] - q * U[t, :]
        for j in range(t + 1, n):
            q = A[t, j] // p
            if q:
                A[:, j] = A[:, j] - q * A[:, t]
                V[:, j] = V[:, j] - q * V[:, t]
        if any(A[i, t] != 0 for i in range(t + 1, m)) or \
                any(A[t, j] != 0 for j in range(t + 1, n)):
            continue
        bad = next((i for i in range(t + 1, m)
                    if any(A[i, j] % p != 0 for j in range(t + 1, n))), None)
        if bad is not None:
            A[t, :] = A[t, :] + A[bad, :]
            U[t, :] = U[t, :] + U[bad, :]
            continue
        if p < 0:
            A[t, :] = -A[t, :]
            U[t, :] = -U[t, :]
        t += 1
    return SmithDecomposition(U, A, V)


def signature(M):
    """
    Inertia of a symmetric integer (or rational) matrix by fraction-free
    symmetric elimination. A zero diagonal is repaired by a unimodular shear,
    which amounts to a 2x2 pivot block.

    :param M: Symmetric matrix.
    :type M: array-like

    :returns: :class:`SignatureTriple`.

    **Examples**

    >>> signature([[0, 1], [1, 0]])
    SignatureTriple(n_plus=1, n_minus=1, n_zero=0)
    """
    M = np.asarray(M, dtype=object) if not isinstance(M, np.ndarray) else M
    if M.ndim != 2:
        M = as_rational_matrix(M)
    check_symmetric(M)
    rows = M.tolist()
    den = reduce(lambda a, b: a * b // gcd(a, b),
                 [Fraction(x).denominator for r in rows for x in r], 1)
    A = [[int(Fraction(x) * den) for x in r] for r in rows]
    n_plus = n_minus = n_zero = 0
    while A:
        n = len(A)
        k = next((i for i in range(n) if A[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n)
                         if A[i][j] != 0), None)
            if pair is None:
                n_zero += n
                break
            i, j = pair
            # x_i -> x_i + x_j makes A[i][i] = 2 A[i][j]
            A[i] = [a + b for a, b in zip(A[i], A[j])]
            for r in A:
                r[i] += r[j]
            k = i
        p = A[k][k]
        if p > 0:
            n_plus += 1
        else:
            n_minus += 1
        rest = [i for i in range(n) if i != k]
        B = [[p * A[i][j] - A[i][k] * A[k][j] for j in rest] for i in rest]
        g = reduce(gcd, (abs(x) for r in B for x in r), 0)
        if p < 0:
            g = -g
        if g not in (0, 1):
            B = [[x // g for x in r] for r in B]
        A = B
    return SignatureTriple(n_plus, n_minus, n_zero)


def block_split(L):
    """
    Unimodular change of basis isolating the null directions of a symmetric
    integer matrix.

    The last `nullity` columns of `U` are a basis of the integral kernel of
    `L`; they are saturated because they are columns of the right Smith
    transform, which is unimodular.

    Any other saturated kernel basis, for instance the lexicographically
    sorted rational kernel basis followed by saturation, spans the same
    lattice, so it differs from these columns by an element of
    ``GL(nullity, Z)``. Completing either basis to a unimodular `U'` gives
    ``U' = U * [[P, 0], [X, Q]]`` with ``P`` in ``GL(rank, Z)``; since the
    kernel columns are killed by `L`, the regular block becomes
    ``P^T * L_reg * P``. Determinant, signature and the discriminant module
    of `L_reg` are therefore independent of the choice.

    :param L: Symmetric integer matrix.
    :type L: array-like

    :returns: :class:`BlockSplit`.

    **Examples**

    >>> bs = block_split([[1, 1], [1, 1]])
    >>> bs.L_reg, bs.nullity
    (array([[1]], dtype=object), 1)
    """
    L = as_int_matrix(L, square=True)
    check_symmetric(L, 'linking matrix')
    m = L.shape[0]
    snf = smith_normal_form(L)
    rho = snf.rank
    U = snf.V
    L_reg = congruence(L, U)[:rho, :rho].copy()
    log.debug('block_split: m=%d rank=%d nullity=%d', m, rho, m - rho)
    return BlockSplit(U, L_reg, rho, m - rho)


def is_even(K):
    """
    True iff every diagonal entry of `K` is even.
    """
    K = as_int_matrix(K, square=True)
    return all(K[i, i] % 2 == 0 for i in range(K.shape[0]))


def kronecker(A, B):
    """
    Kronecker product; block ``(i, j)`` of the result is ``A[i, j] * B``.
    """
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    if A.ndim != 2 or B.ndim != 2:
        raise DimensionMismatchError('kronecker needs 2-d operands')
    (a, b), (c, d) = A.shape, B.shape
    out = zeros(a * c, b * d)
    for i in range(a):
        for j in range(b):
            out[i * c:(i + 1) * c, j * d:(j + 1) * d] = A[i, j] * B
    return out


def direct_sum(A, B):
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    out = zeros(A.shape[0] + B.shape[0], A.shape[1] + B.shape[1])
    out[:A.shape[0], :A.shape[1]] = A
    out[A.shape[0]:, A.shape[1]:] = B
    return out


def _matmul(A, B):
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatchError('cannot multiply {0} by {1}'
                                     .format(A.shape, B.shape))
    if A.shape[1] == 0:
        return zeros(A.shape[0], B.shape[1])
    return A.dot(B)


def congruence(M, E):
    """
    Returns ``E^T * M * E``.
    """
    E = np.asarray(E, dtype=object)
    return _matmul(_matmul(E.T, M), E)


def elementary_matrix(m, i, j, eps=1):
    """
    Identity with `eps` at position ``(j, i)``.
    """
    E = identity(m)
    E[j, i] = eps
    return E


def row_basis(vectors):
    """
    Reduced row echelon basis, over the rationals, of the span of
    `vectors`.

    :returns: object array whose rows are the nonzero RREF rows.
    """
    rows = [[Fraction(x) for x in v] for v in vectors]
    n = len(rows[0]) if rows else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    out = zeros(r, n)
    for i in range(r):
        for j in range(n):
            out[i, j] = rows[i][j]
    return out
