"""
Closed 3-manifold invariants from surgery presentations.

Two scalars are computed for a presentation with linking matrix `L` and an
even nondegenerate level `K`:

* the raw Reshetikhin-Turaev scalar of the pointed category of the
  discriminant module ``(G_K, q_K)``,

      |G|^{-1/2} p_+^{(-m-sigma)/2} p_-^{(-m+sigma)/2}
          sum_{a in G^m} exp(i*pi * a^T (L (x) K^{-1}) a)

  whose prefactor is rewritten, using ``p_+ = exp(i*pi*s/4) |G|^{1/2}``
  and ``p_+ p_- = |G|``, as ``exp(-i*pi*s*sigma/4) |G|^{-(m+1)/2}``;

* the raw toral Chern-Simons scalar in torsion normal form,

      |G|^{m_M} |det L_reg|^{-n/2}
          sum_{[x] in Z^{rho n} / (L_reg (x) I_n)} exp(-i*pi * x^T (L_reg^{-1} (x) K) x).

The sign of the exponent in the second sum is that of the torsion linking
form ``-L_reg^{-1}``.
"""
from fractions import Fraction
import logging

import numpy as np

from torcs.exactnum import (DEFAULT_PRECISION, PhaseQ, ComplexApprox,
                            phase_eval, real_power, approx_equal, Verdict)
from torcs.exceptions import DimensionMismatchError
from torcs.intlinalg import (as_int_matrix, identity, kronecker, signature,
                             rational_inverse, determinant)
from torcs.quadmod import (FiniteQuadraticModule, discriminant_module,
                           cyclic_module, quadratic_sum, coset_gauss_sum,
                           module_signature, check_budget, DEFAULT_BUDGET)
from torcs.surgery.presentation import as_presentation, apply_moves


__all__ = ['InvariantValue', 'STRATEGIES', 'level_module', 'q_LK',
           'q_LK_lifted', 'rt_raw_invariant', 'cyclic_rt_invariant',
           'cs_raw_invariant', 'verify_closed_equivalence',
           'reciprocity_check', 'torsion_refinement', 'verify_kirby']


log = logging.getLogger(__name__)

STRATEGIES = ('direct', 'null-separated')

_STRATEGY_ALIASES = {'direct': 'direct', 'null-separated': 'null-separated',
                     'reduced': 'null-separated'}



class InvariantValue(object):
    """
    A scalar invariant together with the exact data that produced it.

    `phase` and `powers` describe the prefactor: the value is
    ``phase_eval(phase) * prod(base**exponent for base, exponent in powers)
    * raw_sum``.
    """
    def __init__(self, value, m, rho, nu, sigma, order, strategy, terms,
                 phase=None, powers=(), raw_sum=None, kind='rt'):
        self.value = value
        self.m = m
        self.rho = rho
        self.nu = nu
        self.sigma = sigma
        self.order = order
        self.strategy = strategy
        self.terms = terms
        self.phase = phase if phase is not None else PhaseQ(0)
        self.powers = tuple(powers)
        self.raw_sum = raw_sum
        self.kind = kind

    @property
    def prec(self):
        return self.value.prec

    def metadata(self):
        return dict(m=self.m, rho=self.rho, nu=self.nu, sigma=self.sigma,
                    order=self.order, strategy=self.strategy,
                    terms=self.terms)

    def __complex__(self):
        return complex(self.value)

    def __repr__(self):
        return 'InvariantValue({0}, {1}, strategy={2!r}, terms={3})'.format(
            self.kind, self.value.to_string(15), self.strategy, self.terms)



def level_module(K):
    """
    The quadratic module of a level: `K` itself if it already is a
    :class:`FiniteQuadraticModule`, the discriminant module otherwise.
    """
    if isinstance(K, FiniteQuadraticModule):
        return K
    return discriminant_module(K)


def q_LK_lifted(L, K, x):
    """
    ``x^T (L (x) K^{-1}) x mod 2`` for integer lifts ``x = (x_1, ..., x_m)``,
    each ``x_i`` in ``Z^n``.

    :param x: `m` integer vectors of length `n`.
    :type x: sequence of sequences
    """
    L = as_int_matrix(L, square=True)
    K = as_int_matrix(K, square=True)
    X = as_int_matrix(x) if len(x) else as_int_matrix([])
    m, n = L.shape[0], K.shape[0]
    if X.shape != (m, n) and not (m == 0 and X.size == 0):
        raise DimensionMismatchError(
            'expected {0} lifts of length {1}, got shape {2}'
            .format(m, n, X.shape))
    if m == 0:
        return PhaseQ(0)
    K_inv = rational_inverse(K)
    total = Fraction(0)
    for i in range(m):
        for j in range(m):
            if L[i, j]:
                total += L[i, j] * X[i].dot(K_inv).dot(X[j])
    return PhaseQ(total)


def q_LK(L, K, a):
    """
    The phase exponent ``2 Q_{L,K}(a) mod 2`` of a coloring
    ``a = (a_1, ..., a_m)`` of the link by elements of ``G_K``.

    For a lattice level the colors are lifted through the discriminant
    data; for a user-specified module the module's Gram matrix is used.

    **Examples**

    >>> q_LK([[3]], [[2]], [(1,)])
    PhaseQ(3/2)
    """
    L = as_int_matrix(L, square=True)
    M = level_module(K)
    m = L.shape[0]
    if len(a) != m:
        raise DimensionMismatchError('coloring has {0} components, link has '
                                     '{1}'.format(len(a), m))
    a = [M.check_element(c) for c in a]
    if M.lattice is not None:
        return q_LK_lifted(L, M.lattice.K, [M.lattice.lift(c) for c in a])
    total = Fraction(0)
    for i in range(m):
        for j in range(m):
            if L[i, j]:
                total += L[i, j] * M._form(a[i], a[j])
    return PhaseQ(total)


def rt_raw_invariant(L, K, strategy='direct', prec=DEFAULT_PRECISION,
                     budget=DEFAULT_BUDGET, multiprocessing=False, n_proc=2):
    """
    The raw Reshetikhin-Turaev surgery scalar.

    :param L: Linking matrix or :class:`SurgeryPresentation`.

    :param K: Even nondegenerate level, or any nondegenerate
        :class:`FiniteQuadraticModule`.

    :param strategy: ``'direct'`` sums over all ``|G|^m`` colorings;
        ``'null-separated'`` (alias ``'reduced'``) splits off the null
        directions of `L` and sums over ``|G|^rho`` colorings.
    :type strategy: string

    :returns: :class:`InvariantValue`.

    :raises TermBudgetExceeded: if the sum has more than `budget` terms.

    **Examples**

    >>> rt_raw_invariant([[2]], [[2]]).value.to_string(5)
    '0.0+0.0j'
    """
    try:
        strategy = _STRATEGY_ALIASES[strategy]
    except KeyError:
        raise ValueError('unknown strategy {0!r}; use one of {1}'
                         .format(strategy, STRATEGIES))
    P = as_presentation(L)
    M = level_module(K)
    s = module_signature(M, prec, budget)
    G = M.order

    if strategy == 'direct':
        form, copies, extra = P.L, P.m, 0
    else:
        form, copies, extra = P.L_reg, P.rho, P.nu
    terms = G ** copies
    check_budget(terms, budget, 'RT coloring sum')
    Q = kronecker(form, M.q_gram)
    raw, terms = quadratic_sum(list(M.divisors) * copies, Q, 1, prec, budget,
                               multiprocessing, n_proc,
                               what='RT coloring sum')

    phase = PhaseQ(Fraction(-s * P.sigma, 4))
    powers = [(G, Fraction(-(P.m + 1), 2))]
    if extra:
        powers.append((G, Fraction(extra)))
    value = raw
    for base, exponent in powers:
        value = value * real_power(base, exponent, prec)
    value = value * phase_eval(phase, prec)
    log.debug('rt_raw_invariant: m=%d rho=%d nu=%d sigma=%d |G|=%d %s '
              '(%d terms)', P.m, P.rho, P.nu, P.sigma, G, strategy, terms)
    return InvariantValue(value, P.m, P.rho, P.nu, P.sigma, G, strategy,
                          terms, phase, powers, raw, kind='rt')


def cyclic_rt_invariant(L, k, strategy='direct', prec=DEFAULT_PRECISION,
                        budget=DEFAULT_BUDGET):
    """
    :func:`rt_raw_invariant` for the cyclic module ``(Z/k, x^2/k)``.
    """
    return rt_raw_invariant(L, cyclic_module(k), strategy, prec, budget)


def _lattice_level(K):
    if isinstance(K, FiniteQuadraticModule):
        if K.lattice is None:
            raise ValueError('the Chern-Simons scalar needs a lattice level')
        return K.lattice.K, K
    M = discriminant_module(K)
    return M.lattice.K, M


def cs_raw_invariant(L, K, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET,
                     multiprocessing=False, n_proc=2):
    """
    The raw toral Chern-Simons scalar in torsion normal form.

    The sum runs over ``|det L_reg|^n`` coset representatives of
    ``L_reg (x) I_n``.

    :returns: :class:`InvariantValue` with ``strategy='torsion'``.

    **Examples**

    >>> cs_raw_invariant([[0]], [[2]]).value.to_string(5)
    '1.0+0.0j'
    """
    P = as_presentation(L)
    K, M = _lattice_level(K)
    n = K.shape[0]
    G = M.order
    rho = P.rho
    det_reg = abs(determinant(P.L_reg))
    terms = det_reg ** n
    check_budget(terms, budget, 'CS torsion sum')
    if rho:
        A = kronecker(P.L_reg, identity(n))
        Q = kronecker(rational_inverse(P.L_reg), K)
        raw, terms = coset_gauss_sum(A, Q, -1, prec, budget, multiprocessing,
                                     n_proc)
    else:
        raw = ComplexApprox(1, prec)
    powers = [(G, Fraction(P.nu - 1, 2)), (det_reg, Fraction(-n, 2))]
    value = raw
    for base, exponent in powers:
        value = value * real_power(base, exponent, prec)
    log.debug('cs_raw_invariant: rho=%d nu=%d |det L_reg|=%d (%d terms)',
              rho, P.nu, det_reg, terms)
    return InvariantValue(value, P.m, rho, P.nu, P.sigma, G, 'torsion', terms,
                          PhaseQ(0), powers, raw, kind='cs')


def torsion_refinement(L, K, x):
    """
    The quadratic refinement ``-x^T (L_reg^{-1} (x) K) x mod 2`` of the
    torsion linking pairing on ``Z^{rho n} / (L_reg (x) I_n)``. It does not
    depend on the coset representative `x`.
    """
    P = as_presentation(L)
    K = as_int_matrix(K, square=True)
    x = np.array([int(c) for c in x], dtype=object)
    if len(x) != P.rho * K.shape[0]:
        raise DimensionMismatchError('expected a vector of length {0}'
                                     .format(P.rho * K.shape[0]))
    if P.rho == 0:
        return PhaseQ(0)
    Q = kronecker(rational_inverse(P.L_reg), K)
    return PhaseQ(-x.dot(Q).dot(x))


def verify_closed_equivalence(L, K, prec=DEFAULT_PRECISION,
                              budget=DEFAULT_BUDGET, strategy='null-separated',
                              multiprocessing=False, n_proc=2):
    """
    Checks that the raw RT and raw CS scalars agree.

    :returns: :class:`Verdict` whose `lhs` and `rhs` are the RT and CS
        :class:`InvariantValue` objects.
    """
    rt = rt_raw_invariant(L, K, strategy, prec, budget, multiprocessing,
                          n_proc)
    cs = cs_raw_invariant(L, K, prec, budget, multiprocessing, n_proc)
    ok, residual = approx_equal(rt.value, cs.value, prec)
    return Verdict(ok, residual, rt, cs)


def reciprocity_check(A, K, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET):
    """
    Both sides of block reciprocity for a nondegenerate symmetric `A` of
    size `rho` and an even nondegenerate `K` of size `n`:

        sum_{[y] in Z^{rho n}/(I (x) K)} exp(i*pi * y^T (A (x) K^{-1}) y)
          = exp(i*pi*sigma(A (x) K)/4) |G_K|^{rho/2} |det A|^{-n/2}
            sum_{[x] in Z^{rho n}/(A (x) I)} exp(-i*pi * x^T (A^{-1} (x) K) x)

    :returns: :class:`Verdict`.

    **Examples**

    >>> reciprocity_check([[-1]], [[2]]).ok
    True
    """
    A = as_int_matrix(A, square=True)
    M = discriminant_module(K)
    K = M.lattice.K
    rho, n = A.shape[0], K.shape[0]
    det_A = determinant(A)
    if det_A == 0:
        raise ValueError('reciprocity needs a nondegenerate A')
    lhs, _ = coset_gauss_sum(kronecker(identity(rho), K),
                             kronecker(A, M.lattice.K_inverse), 1, prec,
                             budget)
    rhs_sum, _ = coset_gauss_sum(kronecker(A, identity(n)),
                                 kronecker(rational_inverse(A), K), -1, prec,
                                 budget)
    sigma = signature(kronecker(A, K)).sigma
    rhs = rhs_sum * phase_eval(PhaseQ(Fraction(sigma, 4)), prec) * \
        real_power(M.order, Fraction(rho, 2), prec) * \
        real_power(abs(det_A), Fraction(-n, 2), prec)
    ok, residual = approx_equal(lhs, rhs, prec)
    return Verdict(ok, residual, lhs, rhs)


def verify_kirby(L, K, moves, prec=DEFAULT_PRECISION, budget=DEFAULT_BUDGET,
                 strategy='null-separated', compare_cs=True):
    """
    Compares the RT scalar before and after a sequence of Kirby moves, and
    the Chern-Simons scalar as well when `K` is a lattice level.

    :param compare_cs: If False, only the RT scalar is compared. User
        specified modules have no Chern-Simons scalar and are never
        compared.
    :type compare_cs: boolean, optional

    :returns: :class:`Verdict` with the two RT :class:`InvariantValue`
        objects; `residual` is the larger of the two residuals.
    """
    M = level_module(K)
    moved = apply_moves(L, moves)
    before = rt_raw_invariant(L, M, strategy, prec, budget)
    after = rt_raw_invariant(moved, M, strategy, prec, budget)
    ok, residual = approx_equal(before.value, after.value, prec)
    if compare_cs and M.lattice is not None:
        cs_ok, cs_residual = approx_equal(
            cs_raw_invariant(L, M, prec, budget).value,
            cs_raw_invariant(moved, M, prec, budget).value, prec)
        log.debug('kirby: rt residual %s, cs residual %s', residual,
                  cs_residual)
        ok = ok and cs_ok
        residual = max(residual, cs_residual)
    return Verdict(ok, residual, before, after)
