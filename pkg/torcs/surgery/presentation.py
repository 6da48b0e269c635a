"""
Integral surgery presentations and Kirby moves.
"""
from collections import namedtuple
from fractions import Fraction
from functools import reduce
import logging
import operator

import numpy as np

from torcs.intlinalg import (as_int_matrix, check_symmetric, block_split,
                             signature, smith_normal_form, determinant,
                             direct_sum, congruence, elementary_matrix,
                             matrix_rows)


__all__ = ['SurgeryPresentation', 'HomologySummary', 'homology',
           'kirby_stabilize', 'kirby_slide', 'orientation_reverse',
           'apply_moves', 'as_presentation']


log = logging.getLogger(__name__)



class HomologySummary(namedtuple('HomologySummary',
                                 'b1 torsion_divisors torsion_order m_M')):
    """
    First homology of the surgered manifold: ``Z^b1 + Z^rho / L_reg Z^rho``
    and the normalization exponent ``m_M = (b1 - 1)/2``.
    """
    __slots__ = ()



class SurgeryPresentation(object):
    """
    A closed 3-manifold presented by integral surgery on a framed link with
    linking matrix `L`.

    The block split and the signature of `L` are computed once, at
    construction. ``SurgeryPresentation([])`` is the empty link, i.e. the
    3-sphere.

    :param L: Symmetric integer matrix; diagonal entries are framings.
    :type L: array-like
    """
    def __init__(self, L):
        self.L = as_int_matrix(L, square=True)
        check_symmetric(self.L, 'linking matrix')
        self.split = block_split(self.L)
        self.signature_triple = signature(self.L)

    @property
    def m(self):
        return self.L.shape[0]

    @property
    def rho(self):
        return self.split.rank

    @property
    def nu(self):
        return self.split.nullity

    @property
    def sigma(self):
        return self.signature_triple.sigma

    @property
    def L_reg(self):
        return self.split.L_reg

    @property
    def U(self):
        return self.split.U

    def __eq__(self, other):
        if not isinstance(other, SurgeryPresentation):
            return NotImplemented
        return matrix_rows(self.L) == matrix_rows(other.L)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __repr__(self):
        return 'SurgeryPresentation({0})'.format(matrix_rows(self.L))



def as_presentation(P):
    return P if isinstance(P, SurgeryPresentation) else SurgeryPresentation(P)


def homology(P):
    """
    Betti number, torsion and ``m_M`` of the presented manifold.

    **Examples**

    >>> homology(SurgeryPresentation([[5]]))
    HomologySummary(b1=0, torsion_divisors=[5], torsion_order=5, m_M=Fraction(-1, 2))
    """
    P = as_presentation(P)
    divisors = [d for d in smith_normal_form(P.L_reg).divisors if d > 1]
    order = abs(determinant(P.L_reg))
    assert order == reduce(operator.mul, divisors, 1)
    return HomologySummary(P.nu, divisors, order, Fraction(P.nu - 1, 2))


def kirby_stabilize(P, sign=1):
    """
    Adjoins a distant unknot with framing `sign`: ``L' = L + [sign]``.
    """
    if sign not in (1, -1):
        raise ValueError('stabilization sign must be +1 or -1')
    P = as_presentation(P)
    return SurgeryPresentation(direct_sum(P.L, as_int_matrix([[sign]])))


def kirby_slide(P, i, j, eps=1):
    """
    Handle slide of component `i` over component `j`:
    ``L' = E^T L E`` with `E` the identity plus `eps` at ``(j, i)``.

    **Examples**

    >>> kirby_slide([[1, 0], [0, 1]], 1, 0).L.tolist()
    [[1, 1], [1, 2]]
    """
    P = as_presentation(P)
    if i == j:
        raise ValueError('a component cannot slide over itself')
    if eps not in (1, -1):
        raise ValueError('slide sign must be +1 or -1')
    if not (0 <= i < P.m and 0 <= j < P.m):
        raise IndexError('components {0}, {1} out of range for m={2}'
                         .format(i, j, P.m))
    E = elementary_matrix(P.m, i, j, eps)
    return SurgeryPresentation(congruence(P.L, E))


def orientation_reverse(P):
    """
    The mirror manifold, presented by ``-L``.
    """
    P = as_presentation(P)
    return SurgeryPresentation(-P.L)


def apply_moves(P, moves):
    """
    Applies a sequence of moves, each ``('stabilize', sign)`` or
    ``('slide', i, j, eps)``.
    """
    P = as_presentation(P)
    for move in moves:
        kind = move[0]
        if kind == 'stabilize':
            P = kirby_stabilize(P, *move[1:])
        elif kind == 'slide':
            P = kirby_slide(P, *move[1:])
        else:
            raise ValueError('unknown Kirby move {0!r}'.format(kind))
    return P
