"""
Maslov-Kashiwara index of a triple of Lagrangian subspaces.
"""
import logging

from torcs.exceptions import NotLagrangianError, DimensionMismatchError
from torcs.intlinalg import (as_rational_matrix, row_basis, signature, zeros,
                             identity, congruence)


__all__ = ['LagrangianTriple', 'standard_symplectic_form', 'maslov_index',
           'toral_maslov_index', 'is_lagrangian']


log = logging.getLogger(__name__)



def standard_symplectic_form(h):
    """
    ``[[0, I_h], [-I_h, 0]]``.
    """
    J = zeros(2 * h)
    J[:h, h:] = identity(h)
    J[h:, :h] = -identity(h)
    return J


def _check_form(omega):
    n = omega.shape[0]
    if omega.shape != (n, n) or n % 2:
        raise DimensionMismatchError('symplectic form must be square of even '
                                     'size, got {0}'.format(omega.shape))
    for i in range(n):
        for j in range(n):
            if omega[i, j] != -omega[j, i]:
                raise ValueError('symplectic form is not antisymmetric')


def is_lagrangian(basis, omega):
    """
    True iff the rows of `basis` are independent, span half the dimension
    and are pairwise orthogonal under `omega`.
    """
    h = omega.shape[0] // 2
    if basis.shape != (h, omega.shape[0]):
        return False
    W = congruence(omega, basis.T)
    return all(x == 0 for x in W.flat)



class LagrangianTriple(object):
    """
    Three Lagrangian subspaces of ``(Q^{2h}, omega)``, each given by a
    spanning set of rational vectors.

    :param spans: Three lists of vectors.
    :type spans: sequence

    :param omega: Antisymmetric nondegenerate rational matrix. Defaults to
        the standard form.

    :raises NotLagrangianError: if a subspace is not Lagrangian.
    """
    def __init__(self, L1, L2, L3, omega=None):
        spans = [L1, L2, L3]
        dim = len(list(L1)[0])
        self.omega = standard_symplectic_form(dim // 2) if omega is None \
            else as_rational_matrix(omega)
        _check_form(self.omega)
        self.bases = []
        for k, span in enumerate(spans):
            span = list(span)
            if any(len(v) != self.omega.shape[0] for v in span):
                raise DimensionMismatchError(
                    'subspace {0} lives in the wrong dimension'.format(k + 1))
            B = row_basis(span)
            if not is_lagrangian(B, self.omega):
                raise NotLagrangianError(
                    'subspace {0} is not Lagrangian (rank {1}, dimension '
                    '{2})'.format(k + 1, B.shape[0], self.omega.shape[0]))
            self.bases.append(B)

    @property
    def h(self):
        return self.omega.shape[0] // 2

    def permuted(self, order):
        """
        The triple with its subspaces reordered by `order`.
        """
        return LagrangianTriple(*[self.bases[k].tolist() for k in order],
                                omega=self.omega)

    def wall_matrix(self):
        """
        Symmetric matrix of ``omega(x1,x2) + omega(x2,x3) + omega(x3,x1)``
        on ``L1 + L2 + L3`` in the stored bases.
        """
        h = self.h
        B1, B2, B3 = self.bases
        S = zeros(3 * h)
        for (i, Bi), (j, Bj) in (((0, B1), (1, B2)), ((1, B2), (2, B3)),
                                 ((2, B3), (0, B1))):
            W = Bi.dot(self.omega).dot(Bj.T)
            S[i * h:(i + 1) * h, j * h:(j + 1) * h] += W / 2
            S[j * h:(j + 1) * h, i * h:(i + 1) * h] += W.T / 2
        return S


def maslov_index(t):
    """
    Signature of the Wall form of a Lagrangian triple.

    **Examples**

    >>> maslov_index(LagrangianTriple([[1, 0]], [[0, 1]], [[1, 1]]))
    -1
    """
    return signature(t.wall_matrix()).sigma


def toral_maslov_index(t, K):
    """
    ``sigma(K) * maslov_index(t)``.
    """
    return signature(K).sigma * maslov_index(t)
