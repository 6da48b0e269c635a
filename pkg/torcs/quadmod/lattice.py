"""
Discriminant modules of even lattices.
"""
import logging

import numpy as np

from torcs.exceptions import OddLatticeError, DegenerateLatticeError
from torcs.intlinalg import (as_int_matrix, check_symmetric, determinant,
                             rational_inverse, integer_inverse,
                             smith_normal_form, congruence)
from torcs.quadmod.base import FiniteQuadraticModule, GroupElement


__all__ = ['LatticeDiscriminantData', 'discriminant_module', 'check_level',
           'E8_GRAM', 'A2_GRAM']


log = logging.getLogger(__name__)


E8_GRAM = [[ 2, -1,  0,  0,  0,  0,  0,  0],
           [-1,  2, -1,  0,  0,  0,  0,  0],
           [ 0, -1,  2, -1,  0,  0,  0, -1],
           [ 0,  0, -1,  2, -1,  0,  0,  0],
           [ 0,  0,  0, -1,  2, -1,  0,  0],
           [ 0,  0,  0,  0, -1,  2, -1,  0],
           [ 0,  0,  0,  0,  0, -1,  2,  0],
           [ 0,  0, -1,  0,  0,  0,  0,  2]]

A2_GRAM = [[2, -1], [-1, 2]]



def check_level(K):
    """
    Validates a level form: square, symmetric, even and nondegenerate.

    :returns: `K` as an integer object array.

    :raises OddLatticeError: if a diagonal entry is odd.
    :raises DegenerateLatticeError: if ``det K = 0``.
    """
    K = as_int_matrix(K, square=True)
    check_symmetric(K, 'K')
    for i in range(K.shape[0]):
        if K[i, i] % 2:
            raise OddLatticeError(i, K[i, i])
    if determinant(K) == 0:
        raise DegenerateLatticeError('K is degenerate: det K = 0')
    return K



class LatticeDiscriminantData(object):
    """
    The level form `K` with its inverse and a section of
    ``Z^n -> Lambda*/K Lambda``.

    `lift_map` has one column per nontrivial cyclic factor; column `i` is an
    integer representative of the `i`-th generator. `coords_map` sends a
    representative back to group coordinates (before reduction).
    """
    def __init__(self, K):
        self.K = check_level(K)
        self.n = self.K.shape[0]
        self.K_inverse = rational_inverse(self.K)
        self.det = determinant(self.K)
        self.order = abs(self.det)
        snf = smith_normal_form(self.K)
        self.snf = snf
        divisors = snf.divisors
        self.nontrivial = [i for i, d in enumerate(divisors) if d > 1]
        self.all_divisors = divisors
        U_inv = integer_inverse(snf.U)
        self.lift_map = U_inv[:, self.nontrivial]
        self.coords_map = snf.U[self.nontrivial, :]
        log.debug('discriminant group of order %d, divisors %s', self.order,
                  [divisors[i] for i in self.nontrivial])

    @property
    def divisors(self):
        return [self.all_divisors[i] for i in self.nontrivial]

    def lift(self, a):
        """
        Integer representative in ``Z^n`` of the group element `a`.
        """
        a = np.array([int(c) for c in a], dtype=object)
        if len(a) == 0:
            return np.array([0] * self.n, dtype=object)
        return self.lift_map.dot(a)

    def coordinates(self, x):
        """
        Group element represented by the integer vector `x`.
        """
        x = np.array([int(c) for c in x], dtype=object)
        if not self.nontrivial:
            return GroupElement(())
        y = self.coords_map.dot(x)
        return GroupElement(int(c) % d for c, d in zip(y, self.divisors))



def discriminant_module(K):
    """
    The discriminant module ``(G_K, q_K)`` of an even nondegenerate
    lattice, ``q_K([x]) = exp(i*pi * x^T K^{-1} x)``.

    :param K: Level form.
    :type K: array-like

    :returns: :class:`FiniteQuadraticModule` with ``provenance='lattice'``
        and the :class:`LatticeDiscriminantData` in its `lattice` attribute.

    **Examples**

    >>> M = discriminant_module([[2, -1], [-1, 2]])
    >>> M.divisors, M.q_value((1,))
    ((3,), PhaseQ(2/3))
    """
    data = LatticeDiscriminantData(K)
    q_gram = congruence(data.K_inverse, data.lift_map)
    return FiniteQuadraticModule(data.divisors, q_gram, provenance='lattice',
                                 lattice=data)
