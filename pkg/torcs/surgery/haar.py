"""
The Haar-normalized surgery functional of a finite quadratic module.

For a linking matrix `L` with `m_+` positive and `m_-` negative
eigenvalues,

    tau(M_L) = alpha_+^{-m_+} alpha_-^{-m_-} int_{G^m} prod_i theta(g_i)^{L_ii}
               prod_{i<j} b(g_i, g_j)^{L_ij} dg

with one-component Gauss factors ``alpha_+- = int_G theta^{+-1}``. Both
integrals use the same measure on `G`: counting measure (the default) or
the Haar probability measure. The functional is tied to the RT scalar by

    Z^{RT,raw} = |G|^e tau,   e = -(b1+1)/2 (counting), (b1-1)/2 (probability).
"""
from fractions import Fraction
import itertools
import logging

from torcs.exactnum import (DEFAULT_PRECISION, ComplexApprox, PhaseQ,
                            phase_eval, real_power, tolerance, get_context)
from torcs.exceptions import VanishingGaussFactor
from torcs.intlinalg import kronecker
from torcs.quadmod import gauss_sum, quadratic_sum, DEFAULT_BUDGET
from torcs.surgery.presentation import as_presentation
from torcs.surgery.invariants import level_module


__all__ = ['MEASURES', 'gauss_factors', 'haar_functional',
           'haar_bridge_exponent', 'brute_force_integral']


log = logging.getLogger(__name__)

MEASURES = ('counting', 'probability')



def _check_measure(measure):
    if measure not in MEASURES:
        raise ValueError('measure must be one of {0}, got {1!r}'
                         .format(MEASURES, measure))


def gauss_factors(M, prec=DEFAULT_PRECISION, measure='counting',
                  budget=DEFAULT_BUDGET):
    """
    ``(alpha_+, alpha_-)``, the integrals of ``theta`` and ``theta^{-1}``.

    :raises VanishingGaussFactor: if either is zero within tolerance.
    """
    _check_measure(measure)
    out = []
    for sign in (1, -1):
        alpha = gauss_sum(M, sign, prec, budget)
        if measure == 'probability':
            alpha = alpha * Fraction(1, M.order)
        if abs(alpha) < tolerance(prec):
            raise VanishingGaussFactor(
                'alpha_{0} vanishes for {1!r}'.format('+' if sign > 0 else '-',
                                                      M))
        out.append(alpha)
    return tuple(out)


def haar_functional(M, L, prec=DEFAULT_PRECISION, measure='counting',
                    budget=DEFAULT_BUDGET):
    """
    The normalized functional ``tau(M_L)``.

    :param M: Finite quadratic module, or an even level `K`.

    :param L: Linking matrix or :class:`SurgeryPresentation`.

    :param measure: ``'counting'`` or ``'probability'``.
    :type measure: string

    :returns: ComplexApprox.

    **Examples**

    >>> haar_functional(discriminant_module([[2]]), [[0]]).to_string(5)
    '2.0+0.0j'
    """
    _check_measure(measure)
    M = level_module(M)
    P = as_presentation(L)
    if P.m == 0:
        return ComplexApprox(1, prec)
    alpha_p, alpha_m = gauss_factors(M, prec, measure, budget)
    sig = P.signature_triple
    integral, _ = quadratic_sum(list(M.divisors) * P.m,
                                kronecker(P.L, M.q_gram), 1, prec, budget,
                                what='Haar integral')
    if measure == 'probability':
        integral = integral * real_power(M.order, -P.m, prec)
    tau = integral
    if sig.n_plus:
        tau = tau / alpha_p ** sig.n_plus
    if sig.n_minus:
        tau = tau / alpha_m ** sig.n_minus
    return tau


def haar_bridge_exponent(b1, measure='counting'):
    """
    The exponent `e` with ``Z^{RT,raw} = |G|^e tau``.
    """
    _check_measure(measure)
    if measure == 'counting':
        return Fraction(-(b1 + 1), 2)
    return Fraction(b1 - 1, 2)


def brute_force_integral(M, L, prec=DEFAULT_PRECISION, measure='counting'):
    """
    The surgery integral evaluated term by term from q-values and the
    bicharacter, without the phase histogram. Intended for small cases.
    """
    _check_measure(measure)
    P = as_presentation(L)
    ctx = get_context(prec)
    total = ctx.mpc(0)
    elements = list(M.elements())
    for g in itertools.product(elements, repeat=P.m):
        phase = PhaseQ(0)
        for i in range(P.m):
            phase = phase + M.q_value(g[i]) * int(P.L[i, i])
            for j in range(i + 1, P.m):
                phase = phase + M.bicharacter(g[i], g[j]) * int(P.L[i, j])
        total += phase_eval(phase, prec).value
    out = ComplexApprox(total, prec)
    if measure == 'probability':
        out = out * real_power(M.order, -P.m, prec)
    return out
