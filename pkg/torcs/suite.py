"""
The acceptance suite: twelve families of seeded checks covering sphere
normalizations, the closed equivalence, Milgram's formula, reciprocity,
Kirby invariance, strategy agreement, modular data, weight cancellation,
cyclic reduction, the Haar bridge and the Maslov cocycle.

Cases are plain picklable tuples ``(criterion, index, params, prec,
budget)`` run by the top-level :func:`run_case`, so that a process pool can
map over them. Results are always returned in case order.
"""
from collections import namedtuple, OrderedDict
from fractions import Fraction
import logging
import multiprocessing as mp
import platform
import warnings

from progressbar import ProgressBar, Percentage, Bar

from torcs.exactnum import (DEFAULT_PRECISION, ComplexApprox, real_power,
                            approx_equal, Verdict)
from torcs.exceptions import TorcsError, TermBudgetExceeded
from torcs.intlinalg import determinant
from torcs.quadmod import (A2_GRAM, E8_GRAM, milgram_check, DEFAULT_BUDGET,
                           discriminant_module)
from torcs.sampling import (random_state, random_symmetric,
                            random_even_level, random_nondegenerate,
                            random_moves, random_lagrangian)
from torcs.surgery import (rt_raw_invariant, cs_raw_invariant,
                           cyclic_rt_invariant, verify_closed_equivalence,
                           reciprocity_check, verify_kirby, haar_functional,
                           haar_bridge_exponent, homology)
from torcs.tqft import (modular_relations_check, closure_weight_consistency,
                        LagrangianTriple, maslov_index)


__all__ = ['CRITERIA', 'CaseResult', 'SuiteRunner', 'SuiteRunnerSeq',
           'SuiteRunnerMulti', 'run_case', 'build_cases', 'summarize',
           'FIXED_LEVELS']


log = logging.getLogger(__name__)


FIXED_LEVELS = [[[2]], A2_GRAM, [[2, 0], [0, -2]], [[4]], E8_GRAM]

MILGRAM_LEVELS = [[[2]], A2_GRAM, E8_GRAM, [[2, 0], [0, -2]]]

MODULAR_LEVELS = [[[2]], A2_GRAM, [[2, 0], [0, -2]], [[4]], E8_GRAM,
                  [[8, 0], [0, 8]]]



class CaseResult(namedtuple('CaseResult', 'criterion index ok residual '
                                          'skipped error')):
    """
    Outcome of a single acceptance case. `error` holds the message of an
    evaluation error (for instance an exhausted term budget); such a case
    counts as failed.
    """
    __slots__ = ()



def _worst(*verdicts):
    ok = all(v.ok for v in verdicts)
    residual = max(v.residual for v in verdicts)
    return Verdict(ok, residual, verdicts[0].lhs, verdicts[0].rhs)


def _exact_verdict(residual):
    return Verdict(residual == 0, residual, None, None)


def _random_link(rs, max_m=3, lo=-3, hi=3):
    return random_symmetric(rs, int(rs.randint(1, max_m + 1)), lo, hi)


# Each criterion is (generator, check, default count). The generator turns a
# random state and a case count into a list of picklable parameter tuples.

def _sphere_cases(rs, count):
    return [(K,) for K in FIXED_LEVELS]


def _sphere_check(params, prec, budget):
    K, = params
    G = abs(determinant(K))
    rhs = real_power(G, Fraction(-1, 2), prec)
    rt = rt_raw_invariant([], K, 'direct', prec, budget).value
    cs = cs_raw_invariant([], K, prec, budget).value
    return _worst(Verdict(*(approx_equal(rt, rhs, prec) + (rt, rhs))),
                  Verdict(*(approx_equal(cs, rhs, prec) + (cs, rhs))))


def _handle_check(params, prec, budget):
    K, = params
    rhs = ComplexApprox(1, prec)
    rt = rt_raw_invariant([[0]], K, 'direct', prec, budget).value
    cs = cs_raw_invariant([[0]], K, prec, budget).value
    return _worst(Verdict(*(approx_equal(rt, rhs, prec) + (rt, rhs))),
                  Verdict(*(approx_equal(cs, rhs, prec) + (cs, rhs))))


def _pair_cases(rs, count):
    return [(random_even_level(rs, max_n=2, max_det=16), _random_link(rs))
            for _ in range(count)]


def _equivalence_check(params, prec, budget):
    K, L = params
    return verify_closed_equivalence(L, K, prec, budget)


def _strategy_check(params, prec, budget):
    K, L = params
    direct = rt_raw_invariant(L, K, 'direct', prec, budget)
    reduced = rt_raw_invariant(L, K, 'null-separated', prec, budget)
    ok, residual = approx_equal(direct.value, reduced.value, prec)
    return Verdict(ok, residual, direct, reduced)


def _milgram_cases(rs, count):
    out = [(K,) for K in MILGRAM_LEVELS]
    out += [(random_even_level(rs, max_n=3, max_det=400),)
            for _ in range(count)]
    return out


def _milgram_check(params, prec, budget):
    return milgram_check(params[0], prec, budget)


def _reciprocity_cases(rs, count):
    return [(random_nondegenerate(rs, int(rs.randint(1, 3)), max_det=8),
             random_even_level(rs, max_n=2, max_det=8))
            for _ in range(count)]


def _reciprocity_check(params, prec, budget):
    A, K = params
    return reciprocity_check(A, K, prec, budget)


def _kirby_cases(rs, count):
    out = []
    for _ in range(count):
        K = random_even_level(rs, max_n=2, max_det=4)
        L = _random_link(rs, max_m=2)
        out.append((K, L, random_moves(rs, len(L), 6)))
    return out


def _kirby_check(params, prec, budget):
    K, L, moves = params
    return verify_kirby(L, K, moves, prec, budget)


def _modular_cases(rs, count):
    out = [(K,) for K in MODULAR_LEVELS]
    out += [(random_even_level(rs, max_n=2, max_det=16),)
            for _ in range(count)]
    return out


def _modular_check(params, prec, budget):
    report = modular_relations_check(params[0], prec, budget)
    return Verdict(report.ok, max(v.residual for _, v in report.checks),
                   None, None)


def _weight_cases(rs, count):
    return [(random_nondegenerate(rs, int(rs.randint(1, 4))),
             random_even_level(rs, max_n=2, max_det=16))
            for _ in range(count)]


def _weight_check(params, prec, budget):
    L_reg, K = params
    return closure_weight_consistency(L_reg, K, prec, budget)


def _cyclic_cases(rs, count):
    return [(k, _random_link(rs)) for k in (2, 4, 6) for _ in range(count)]


def _cyclic_check(params, prec, budget):
    k, L = params
    lattice = rt_raw_invariant(L, [[k]], 'null-separated', prec, budget)
    cyclic = cyclic_rt_invariant(L, k, 'null-separated', prec, budget)
    ok, residual = approx_equal(lattice.value, cyclic.value, prec)
    return Verdict(ok, residual, lattice, cyclic)


def _haar_cases(rs, count):
    return [(random_even_level(rs, max_n=2, max_det=8), _random_link(rs))
            for _ in range(count)]


def _haar_check(params, prec, budget):
    K, L = params
    M = discriminant_module(K)
    rt = rt_raw_invariant(L, M, 'direct', prec, budget).value
    tau = haar_functional(M, L, prec, 'counting', budget)
    e = haar_bridge_exponent(homology(L).b1, 'counting')
    rhs = real_power(M.order, e, prec) * tau
    ok, residual = approx_equal(rt, rhs, prec)
    return Verdict(ok, residual, rt, rhs)


def _maslov_cases(rs, count):
    return [[random_lagrangian(rs, 1 + i % 2) for _ in range(4)]
            for i in range(count)]


def _maslov_check(params, prec, budget):
    L1, L2, L3, L4 = params
    mu = lambda a, b, c: maslov_index(LagrangianTriple(a, b, c))
    cocycle = mu(L2, L3, L4) - mu(L1, L3, L4) + mu(L1, L2, L4) - \
        mu(L1, L2, L3)
    m123 = mu(L1, L2, L3)
    antisymmetry = abs(mu(L2, L1, L3) + m123) + abs(mu(L1, L3, L2) + m123)
    cyclic = abs(mu(L2, L3, L1) - m123)
    return _exact_verdict(abs(cocycle) + antisymmetry + cyclic)


CRITERIA = OrderedDict([
    ('sphere', (_sphere_cases, _sphere_check, 0)),
    ('handle', (_sphere_cases, _handle_check, 0)),
    ('equivalence', (_pair_cases, _equivalence_check, 200)),
    ('milgram', (_milgram_cases, _milgram_check, 100)),
    ('reciprocity', (_reciprocity_cases, _reciprocity_check, 50)),
    ('kirby', (_kirby_cases, _kirby_check, 100)),
    ('strategy', (_pair_cases, _strategy_check, 200)),
    ('modular', (_modular_cases, _modular_check, 10)),
    ('weights', (_weight_cases, _weight_check, 100)),
    ('cyclic', (_cyclic_cases, _cyclic_check, 20)),
    ('haar', (_haar_cases, _haar_check, 50)),
    ('maslov', (_maslov_cases, _maslov_check, 100)),
])

# the strategy criterion replays the pairs of the equivalence criterion
_SEED_OFFSETS = dict((name, k) for k, name in enumerate(CRITERIA))
_SEED_OFFSETS['strategy'] = _SEED_OFFSETS['equivalence']



def build_cases(seed=0, cases=None, criteria=None, prec=DEFAULT_PRECISION,
                budget=DEFAULT_BUDGET):
    """
    All acceptance cases, in a deterministic order.

    :param seed: 64-bit seed; criterion `k` draws from ``seed + k``.
    :type seed: int

    :param cases: Number of random cases per criterion; None keeps each
        criterion's default.
    :type cases: int, optional

    :param criteria: Names of the criteria to run; all by default.
    :type criteria: list of strings, optional
    """
    names = list(CRITERIA) if criteria is None else list(criteria)
    out = []
    for name in names:
        if name not in CRITERIA:
            raise ValueError('unknown criterion {0!r}; use one of {1}'
                             .format(name, list(CRITERIA)))
        generate, _, default = CRITERIA[name]
        rs = random_state(seed + _SEED_OFFSETS[name])
        count = default if cases is None else int(cases)
        for i, params in enumerate(generate(rs, count)):
            out.append((name, i, params, prec, budget))
    return out


def run_case(case):
    """
    Runs one case. The map function of :class:`SuiteRunnerMulti`.
    """
    name, index, params, prec, budget = case
    check = CRITERIA[name][1]
    try:
        v = check(params, prec, budget)
    except TermBudgetExceeded as e:
        if name == 'strategy':
            return CaseResult(name, index, True, 0, True, None)
        return CaseResult(name, index, False, None, False, str(e))
    except (TorcsError, ValueError, ArithmeticError) as e:
        return CaseResult(name, index, False, None, False, str(e))
    log.debug('%s[%d]: ok=%s residual=%s', name, index, v.ok, v.residual)
    return CaseResult(name, index, bool(v.ok), v.residual, False, None)



class SuiteRunnerSeq(object):
    """
    Runs acceptance cases one after another.

    :param cases: Output of :func:`build_cases`.
    :type cases: list
    """
    def __init__(self, cases):
        self.cases = list(cases)

    def run(self, verbose=False):
        """
        :param verbose: If True, a progress bar is shown.
        :type verbose: boolean, optional

        :returns: list of :class:`CaseResult` in case order.
        """
        results = []
        if verbose:
            pbar = ProgressBar(widgets=[Percentage(), Bar()],
                               max_value=len(self.cases)).start()
        for n, case in enumerate(self.cases):
            results.append(run_case(case))
            if verbose:
                pbar.update(n + 1)
        if verbose:
            pbar.finish()
        return results



class SuiteRunnerMulti(SuiteRunnerSeq):
    """
    Runs acceptance cases on a pool of `n_proc` processes. ``Pool.map``
    keeps the case order.
    """
    def __init__(self, cases, n_proc=2):
        super(SuiteRunnerMulti, self).__init__(cases)
        self.n_proc = n_proc

    def run(self, verbose=False):
        if mp.cpu_count() < self.n_proc:
            raise RuntimeError("Suite seeded with more cores than available." +
                               " Requires {0} cores.".format(self.n_proc))
        p = mp.Pool(self.n_proc)
        results = []
        if verbose:
            pbar = ProgressBar(widgets=[Percentage(), Bar()],
                               max_value=len(self.cases)).start()
        for n, r in enumerate(p.imap(run_case, self.cases)):
            results.append(r)
            if verbose:
                pbar.update(n + 1)
        if verbose:
            pbar.finish()
        p.close()
        return results



class SuiteRunner(object):
    """
    Depending on the boolean parameter `multiprocessing`, returns and
    initializes an instance of either SuiteRunnerSeq or SuiteRunnerMulti.

    On Windows the sequential runner is returned with a RuntimeWarning.
    """
    def __new__(cls, cases, multiprocessing=False, n_proc=2):

        if multiprocessing and platform.system() != 'Windows':
            return SuiteRunnerMulti(cases, n_proc=n_proc)
        else:
            if multiprocessing and platform.system() == 'Windows':
                warnings.warn("""Multiprocessing is not implemented on Windows.
                Defaulting to sequential algorithm.""", RuntimeWarning)
            return SuiteRunnerSeq(cases)



def summarize(results):
    """
    Per criterion: number of cases, failures, skipped cases and the largest
    residual.

    :returns: OrderedDict keyed by criterion name, in run order.
    """
    out = OrderedDict()
    for r in results:
        s = out.setdefault(r.criterion, dict(cases=0, failed=0, skipped=0,
                                             max_residual=None))
        s['cases'] += 1
        s['failed'] += 0 if r.ok else 1
        s['skipped'] += 1 if r.skipped else 0
        if r.residual is not None and (s['max_residual'] is None or
                                       r.residual > s['max_residual']):
            s['max_residual'] = r.residual
    return out
