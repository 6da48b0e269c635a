"""
Weight bookkeeping of the extended theory.

An extended closed 3-manifold carries an integer weight `n`; its corrected
scalar is ``kappa(K)^{-n}`` times the raw one, where
``kappa(K) = |G|^{-1/2} p_-(K) = exp(-i*pi*sigma(K)/4)`` is the anomaly
constant. Only the scalar consequences are implemented here: the
correction itself, its cancellation against the closure-weight signature,
and the lens-space closures.
"""
from fractions import Fraction
import logging

from torcs.exactnum import (DEFAULT_PRECISION, ComplexApprox, PhaseQ,
                            get_context, phase_eval, real_power, approx_equal,
                            Verdict)
from torcs.intlinalg import as_int_matrix, determinant, kronecker, signature
from torcs.quadmod import (discriminant_module, gauss_sum, anomaly_kappa,
                           module_signature, DEFAULT_BUDGET)
from torcs.surgery.invariants import rt_raw_invariant, level_module


__all__ = ['ExtendedScalar', 'extended_correct', 'closure_weight_consistency',
           'lens_space_consistency']


log = logging.getLogger(__name__)



class ExtendedScalar(object):
    """
    A raw scalar, its weight `n` and the corrected value
    ``kappa(K)^{-n} * raw``.
    """
    def __init__(self, raw, n, corrected, sigma_K):
        self.raw = raw
        self.n = n
        self.corrected = corrected
        self.sigma_K = sigma_K

    @property
    def weight_class(self):
        return self.n % 8

    def __repr__(self):
        return 'ExtendedScalar(n={0}, corrected={1})'.format(
            self.n, self.corrected.to_string(15))


def extended_correct(raw, n, K, prec=DEFAULT_PRECISION):
    """
    Applies the weight correction ``kappa(K)^{-n}``.

    :param raw: The raw scalar.
    :type raw: ComplexApprox or number

    :param n: Weight.
    :type n: int

    **Examples**

    >>> extended_correct(1, 1, [[2]]).corrected.to_string(5)
    '0.70711+0.70711j'
    """
    M = discriminant_module(K)
    sigma = signature(M.lattice.K).sigma
    raw = raw if isinstance(raw, ComplexApprox) else ComplexApprox(raw, prec)
    kappa = anomaly_kappa(M.lattice.K, prec)
    corrected = kappa ** (-int(n)) * raw
    return ExtendedScalar(raw, int(n), corrected, sigma)


def closure_weight_consistency(L_reg, K, prec=DEFAULT_PRECISION,
                               budget=DEFAULT_BUDGET):
    """
    With ``n = sigma(L_reg)`` checks
    ``kappa(K)^{-n} exp(-i*pi*sigma(L_reg (x) K)/4) = 1``. Here `kappa` is
    taken from the Gauss sum and ``sigma(L_reg (x) K)`` from the Kronecker
    product, so the identity is tested rather than assumed.

    :returns: :class:`Verdict` with the product as `lhs`.
    """
    L_reg = as_int_matrix(L_reg, square=True)
    if determinant(L_reg) == 0:
        raise ValueError('closure weight needs a nondegenerate L_reg')
    M = discriminant_module(K)
    n = signature(L_reg).sigma
    kappa = gauss_sum(M, -1, prec, budget) * \
        real_power(M.order, Fraction(-1, 2), prec)
    sigma_LK = signature(kronecker(L_reg, M.lattice.K)).sigma
    lhs = kappa ** (-n) * phase_eval(PhaseQ(Fraction(-sigma_LK, 4)), prec)
    rhs = ComplexApprox(1, prec)
    ok, residual = approx_equal(lhs, rhs, prec)
    return Verdict(ok, residual, lhs, rhs)


def lens_space_consistency(p, K, prec=DEFAULT_PRECISION,
                           budget=DEFAULT_BUDGET):
    """
    Compares the RT scalar of surgery on ``[[p]]`` with its closed form
    ``exp(-i*pi*sign(p)*sigma(K)/4) |G|^{-1} sum_a q(a)^p``. ``p = 0`` is
    ``S^2 x S^1``, ``p = +-1`` the 3-sphere.

    :returns: :class:`Verdict`.
    """
    p = int(p)
    M = level_module(K)
    lhs = rt_raw_invariant([[p]], M, 'direct', prec, budget).value
    ctx = get_context(prec)
    total = ctx.mpc(0)
    for a in M.elements():
        total += phase_eval(M.q_value(a) * p, prec).value
    sigma_p = (p > 0) - (p < 0)
    s = module_signature(M, prec, budget)
    rhs = ComplexApprox(total, prec) * \
        phase_eval(PhaseQ(Fraction(-sigma_p * s, 4)), prec) * \
        real_power(M.order, -1, prec)
    ok, residual = approx_equal(lhs, rhs, prec)
    return Verdict(ok, residual, lhs, rhs)
