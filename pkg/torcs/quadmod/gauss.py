"""
Quadratic Gauss sums over finite boxes, Milgram's formula and the anomaly
constant.

Every sum in this package has the form ``sum_y exp(+-i*pi * y^T P y / den)``
with `y` ranging over a box ``prod(range(d_i))``. The exponents are tallied
exactly into a histogram of residues modulo ``2*den`` and only then
evaluated, once per residue, at the requested precision. The histogram is
exact, so the result does not depend on how the box is partitioned among
worker processes.
"""
from collections import Counter
from fractions import Fraction
from functools import reduce
import logging
import multiprocessing as mp
import operator
import platform
import warnings

import numpy as np

from torcs.exactnum import (DEFAULT_PRECISION, ComplexApprox, PhaseQ,
                            get_context, phase_eval, real_power,
                            approx_equal, Verdict)
from torcs.exceptions import TermBudgetExceeded
from torcs.intlinalg import (as_int_matrix, smith_normal_form,
                             integer_inverse, congruence, signature)
from torcs.split import mp_split_range, chunk_range
from torcs.quadmod.base import (CHUNK_SIZE, box_elements, quadratic_residues,
                                scaled_gram)
from torcs.quadmod.lattice import discriminant_module


__all__ = ['PhaseHistogram', 'PhaseHistogramSeq', 'PhaseHistogramMulti',
           'DEFAULT_BUDGET', 'quadratic_sum', 'gauss_sum', 'coset_gauss_sum',
           'milgram_check', 'anomaly_kappa', 'module_signature',
           'check_budget']


log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8



def check_budget(terms, budget, what='sum'):
    if budget is not None and terms > budget:
        raise TermBudgetExceeded(terms, budget, what)



class PhaseHistogramSeq(object):
    """
    Tallies ``y^T P y mod modulus`` over the box ``prod(range(d_i))``.

    :param divisors: Box side lengths.
    :type divisors: list of int

    :param P: Symmetric integer matrix.
    :type P: array-like

    :param modulus: Residues are taken modulo this integer.
    :type modulus: int

    :See Also: :class:`PhaseHistogramMulti`, :class:`PhaseHistogram`
    """
    def __init__(self, divisors, P, modulus):
        self.divisors = tuple(int(d) for d in divisors)
        self.P = as_int_matrix(P, square=True) if len(self.divisors) \
            else as_int_matrix([])
        self.modulus = int(modulus)
        self.terms = reduce(operator.mul, self.divisors, 1)
        self.counts = Counter()

    def tally(self):
        """
        Fills `self.counts` with residue -> number of box points.
        """
        self.counts = histogram_range(self.divisors, self.P, self.modulus,
                                      0, self.terms)
        return self.counts



class PhaseHistogramMulti(PhaseHistogramSeq):
    """
    :class:`PhaseHistogramSeq` with the box split into contiguous index
    ranges that are tallied by a process pool and merged.
    """
    def __init__(self, divisors, P, modulus, n_proc=2):
        super(PhaseHistogramMulti, self).__init__(divisors, P, modulus)
        self.n_proc = n_proc

    def tally(self, n_proc=None):
        """
        :param n_proc: Number of processes, default `self.n_proc`.
        :type n_proc: int, optional
        """
        n_proc = n_proc or self.n_proc
        ranges = mp_split_range(self.terms, n_proc)
        args = [(self.divisors, self.P, self.modulus, a, b)
                for a, b in ranges]
        p = mp.Pool(n_proc)
        parts = p.map(histogram_fn, args)
        p.close()
        self.counts = Counter()
        for part in parts:
            self.counts.update(part)
        return self.counts



def histogram_fn(args):
    """
    The map function for :class:`PhaseHistogramMulti`. Takes
    ``(divisors, P, modulus, start, stop)`` and returns the Counter for that
    index range.
    """
    return histogram_range(*args)


def histogram_range(divisors, P, modulus, start, stop):
    counts = Counter()
    if not divisors:
        if start < stop:
            counts[0] += 1
        return counts
    for a, b in chunk_range(start, stop, CHUNK_SIZE):
        Y = box_elements(divisors, a, b)
        res, cnt = np.unique(quadratic_residues(Y, P, modulus),
                             return_counts=True)
        counts.update(dict(zip((int(r) for r in res), (int(c) for c in cnt))))
    return counts


class PhaseHistogram(object):
    """
    Depending on the boolean parameter `multiprocessing`, returns and
    initializes an instance of either PhaseHistogramSeq or
    PhaseHistogramMulti.

    On Windows `multiprocessing` is not used; a RuntimeWarning is issued and
    the sequential tally is returned instead.
    """
    def __new__(cls, divisors, P, modulus, multiprocessing=False, n_proc=2):

        kwargs = dict(divisors=divisors, P=P, modulus=modulus)

        if multiprocessing and platform.system() != 'Windows':
            return PhaseHistogramMulti(n_proc=n_proc, **kwargs)
        else:
            if multiprocessing and platform.system() == 'Windows':
                warnings.warn("""Multiprocessing is not implemented on Windows.
                Defaulting to sequential algorithm.""", RuntimeWarning)
            return PhaseHistogramSeq(**kwargs)



def evaluate_histogram(counts, den, sign=1, prec=DEFAULT_PRECISION):
    """
    ``sum count * exp(sign * i*pi * residue / den)``, evaluated residue by
    residue in increasing order.
    """
    ctx = get_context(prec)
    total = ctx.mpc(0)
    for r in sorted(counts):
        z = phase_eval(PhaseQ(Fraction(sign * r, den)), prec).value
        total += counts[r] * z
    return ComplexApprox(total, prec)


def quadratic_sum(divisors, Q, sign=1, prec=DEFAULT_PRECISION,
                  budget=DEFAULT_BUDGET, multiprocessing=False, n_proc=2,
                  what='Gauss sum'):
    """
    ``sum_y exp(sign * i*pi * y^T Q y)`` over the box
    ``prod(range(d_i))`` for a rational symmetric `Q`.

    :returns: ``(value, terms)``.

    :raises TermBudgetExceeded: if the box has more than `budget` points.
    """
    terms = reduce(operator.mul, [int(d) for d in divisors], 1)
    check_budget(terms, budget, what)
    if len(divisors):
        P, den = scaled_gram(Q)
    else:
        P, den = as_int_matrix([]), 1
    h = PhaseHistogram(divisors, P, 2 * den, multiprocessing=multiprocessing,
                       n_proc=n_proc)
    counts = h.tally()
    log.debug('%s: %d terms, %d distinct phases', what, terms, len(counts))
    return evaluate_histogram(counts, den, sign, prec), terms


def gauss_sum(M, sign=1, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET,
              multiprocessing=False, n_proc=2):
    """
    ``p_sign(M) = sum_{u in G} q(u)^sign``.

    :param M: A finite quadratic module.
    :type M: FiniteQuadraticModule

    :param sign: +1 or -1.
    :type sign: int

    **Examples**

    >>> gauss_sum(discriminant_module([[2]])).to_string(5)
    '1.0+1.0j'
    """
    if sign not in (1, -1):
        raise ValueError('sign must be +1 or -1')
    value, _ = quadratic_sum(M.divisors, M.q_gram, sign, prec, budget,
                             multiprocessing, n_proc)
    return value


def coset_gauss_sum(A, Q, sign=1, prec=DEFAULT_PRECISION,
                    budget=DEFAULT_BUDGET, multiprocessing=False, n_proc=2):
    """
    ``sum_{[x] in Z^N / A Z^N} exp(sign * i*pi * x^T Q x)``.

    Cosets are enumerated through the Smith form ``U A V = D``:
    representatives are ``U^{-1} y`` with `y` in the box of nontrivial
    divisors. The caller guarantees that the summand is well defined on
    cosets.

    :param A: Nonsingular integer matrix.
    :param Q: Rational symmetric matrix of the same size.

    :returns: ``(value, terms)``.
    """
    snf = smith_normal_form(A)
    divisors = snf.divisors
    if any(d == 0 for d in divisors):
        raise ValueError('coset sum over an infinite quotient')
    nontrivial = [i for i, d in enumerate(divisors) if d > 1]
    W = integer_inverse(snf.U)[:, nontrivial]
    Qy = congruence(Q, W)
    return quadratic_sum([divisors[i] for i in nontrivial], Qy, sign, prec,
                         budget, multiprocessing, n_proc, what='coset sum')


def _level_module(K):
    return K if hasattr(K, 'q_gram') else discriminant_module(K)


def milgram_check(K, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET):
    """
    Compares ``p_+(K)`` with ``exp(i*pi*sigma(K)/4) |det K|^{1/2}``.

    :returns: :class:`Verdict` with the Gauss sum as `lhs`.

    **Examples**

    >>> milgram_check([[2, -1], [-1, 2]]).ok
    True
    """
    M = discriminant_module(K)
    lhs = gauss_sum(M, 1, prec, budget)
    sigma = signature(M.lattice.K).sigma
    rhs = phase_eval(PhaseQ(Fraction(sigma, 4)), prec) * \
        real_power(M.order, Fraction(1, 2), prec)
    ok, residual = approx_equal(lhs, rhs, prec)
    return Verdict(ok, residual, lhs, rhs)


def anomaly_kappa(K, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET):
    """
    The anomaly constant ``kappa(K) = |G|^{-1/2} p_-(K)``, checked against
    ``exp(-i*pi*sigma(K)/4)``.

    :returns: ``exp(-i*pi*sigma(K)/4)`` as a ComplexApprox.

    :raises ArithmeticError: if the two expressions disagree.
    """
    M = discriminant_module(K)
    sigma = signature(M.lattice.K).sigma
    from_sum = gauss_sum(M, -1, prec, budget) * \
        real_power(M.order, Fraction(-1, 2), prec)
    closed = phase_eval(PhaseQ(Fraction(-sigma, 4)), prec)
    ok, residual = approx_equal(from_sum, closed, prec)
    if not ok:
        raise ArithmeticError('anomaly constant mismatch: residual {0}'
                              .format(residual))
    return closed


def module_signature(M, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET):
    """
    The integer ``s mod 8`` with ``p_+(M) = exp(i*pi*s/4) |G|^{1/2}``.

    For a discriminant module this is ``sigma(K) mod 8`` and is read off the
    lattice directly; for other modules the Gauss sum is evaluated once and
    its argument rounded to the nearest eighth root of unity.

    :raises ValueError: if the Gauss sum is not of that form, which only
        happens for degenerate modules.
    """
    if M.lattice is not None:
        return signature(M.lattice.K).sigma % 8
    if prec in M._signature:
        return M._signature[prec]
    ctx = get_context(prec)
    p = gauss_sum(M, 1, prec, budget)
    z = p * real_power(M.order, Fraction(-1, 2), prec)
    s = int(ctx.nint(ctx.arg(z.value) / (ctx.pi / 4))) % 8
    ok, residual = approx_equal(z, phase_eval(PhaseQ(Fraction(s, 4)), prec),
                                prec)
    if not ok:
        raise ValueError('Gauss sum of {0!r} is not an eighth root of unity '
                         'times |G|^(1/2) (residual {1})'.format(M, residual))
    M._signature[prec] = s
    return s
