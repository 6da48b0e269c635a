"""
Seeded random generators for levels, linking matrices, Kirby move
sequences and Lagrangian subspaces. Every generator takes a
``numpy.random.RandomState`` so that suites are reproducible from a single
seed.
"""
from fractions import Fraction

import numpy as np

from torcs.intlinalg import (determinant, identity,
                             elementary_matrix, is_even)


__all__ = ['random_state', 'random_symmetric', 'random_even_level',
           'random_nondegenerate', 'random_moves', 'random_unimodular',
           'random_lagrangian']



def random_state(seed=0):
    """
    ``numpy.random.RandomState`` for a 64-bit seed (folded to 32 bits).
    """
    seed = int(seed) & 0xFFFFFFFFFFFFFFFF
    return np.random.RandomState((seed ^ (seed >> 32)) & 0xFFFFFFFF)


def random_symmetric(rs, m, lo=-3, hi=3):
    """
    Symmetric `m` x `m` integer matrix with entries in ``[lo, hi]``.
    """
    A = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            A[i][j] = A[j][i] = int(rs.randint(lo, hi + 1))
    return A


def random_even_level(rs, max_n=2, max_det=16, lo=-4, hi=4):
    """
    Even nondegenerate level of size ``1..max_n`` with
    ``|det K| <= max_det``, by rejection.
    """
    while True:
        n = int(rs.randint(1, max_n + 1))
        K = random_symmetric(rs, n, lo, hi)
        for i in range(n):
            K[i][i] -= K[i][i] % 2
        d = determinant(K)
        if d != 0 and abs(d) <= max_det:
            assert is_even(K)
            return K


def random_nondegenerate(rs, m, lo=-3, hi=3, max_det=None):
    while True:
        A = random_symmetric(rs, m, lo, hi)
        d = determinant(A)
        if d != 0 and (max_det is None or abs(d) <= max_det):
            return A


def random_moves(rs, m, count=6):
    """
    `count` Kirby moves starting from a presentation with `m` components.
    Slides need two components; with fewer a stabilization is drawn.
    """
    moves = []
    for _ in range(count):
        if m < 2 or rs.randint(0, 3) == 0:
            moves.append(('stabilize', int(rs.choice([-1, 1]))))
            m += 1
        else:
            i, j = rs.choice(m, 2, replace=False)
            moves.append(('slide', int(i), int(j), int(rs.choice([-1, 1]))))
    return moves


def random_unimodular(rs, m, steps=6):
    """
    Product of `steps` random elementary matrices.
    """
    U = identity(m)
    if m < 2:
        return U
    for _ in range(steps):
        i, j = rs.choice(m, 2, replace=False)
        U = U.dot(elementary_matrix(m, int(i), int(j),
                                    int(rs.choice([-1, 1]))))
    return U


def _random_rational(rs, hi=3):
    return Fraction(int(rs.randint(-hi, hi + 1)), int(rs.randint(1, 3)))


def random_lagrangian(rs, h):
    """
    A Lagrangian subspace of ``Q^{2h}`` with the standard form, as a list
    of `h` spanning vectors: the graph ``[I | S]`` or ``[S | I]`` of a
    random symmetric rational `S`.
    """
    S = [[Fraction(0)] * h for _ in range(h)]
    for i in range(h):
        for j in range(i, h):
            S[i][j] = S[j][i] = _random_rational(rs)
    graph = rs.randint(0, 2)
    rows = []
    for i in range(h):
        e = [Fraction(int(i == k)) for k in range(h)]
        rows.append(e + S[i] if graph == 0 else S[i] + e)
    return rows
