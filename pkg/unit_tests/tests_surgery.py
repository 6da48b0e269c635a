try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction

import numpy as np

from torcs.exactnum import PhaseQ, approx_equal
from torcs.exceptions import (TermBudgetExceeded, DimensionMismatchError,
                              NotSymmetricError)
from torcs.intlinalg import as_int_matrix
from torcs.quadmod import (A2_GRAM, E8_GRAM, FiniteQuadraticModule,
                           cyclic_module, discriminant_module)
from torcs.sampling import (random_state, random_symmetric, random_moves,
                            random_even_level)
from torcs.surgery import *


class TestPresentation(unittest.TestCase):

    def test_basic_data(self):
        P = SurgeryPresentation([[2, 1], [1, 2]])
        self.assertEqual((P.m, P.rho, P.nu, P.sigma), (2, 2, 0, 2))
        P = SurgeryPresentation([[1, 1], [1, 1]])
        self.assertEqual((P.m, P.rho, P.nu), (2, 1, 1))
        self.assertEqual(P.L_reg.tolist(), [[1]])
        P = SurgeryPresentation([])
        self.assertEqual((P.m, P.rho, P.nu, P.sigma), (0, 0, 0, 0))

    def test_validation(self):
        self.assertRaises(NotSymmetricError, SurgeryPresentation,
                          [[1, 2], [0, 1]])
        self.assertRaises(DimensionMismatchError, SurgeryPresentation,
                          [[1, 2]])

    def test_equality(self):
        self.assertEqual(SurgeryPresentation([[1]]), SurgeryPresentation([[1]]))
        self.assertNotEqual(SurgeryPresentation([[1]]),
                            SurgeryPresentation([[-1]]))
        self.assertEqual(repr(SurgeryPresentation([[3]])),
                         'SurgeryPresentation([[3]])')

    def test_homology(self):
        h = homology([[5]])
        self.assertEqual(h, (0, [5], 5, Fraction(-1, 2)))
        h = homology([[0]])
        self.assertEqual((h.b1, h.torsion_divisors, h.torsion_order),
                         (1, [], 1))
        self.assertEqual(h.m_M, 0)
        self.assertEqual(homology([[2, 1], [1, 2]]).torsion_divisors, [3])
        self.assertEqual(homology([[0, 1], [1, 0]]).torsion_order, 1)
        h = homology([[0, 0], [0, 3]])
        self.assertEqual((h.b1, h.torsion_divisors), (1, [3]))
        self.assertEqual(homology([]).m_M, Fraction(-1, 2))

    def test_kirby_moves(self):
        self.assertEqual(kirby_slide([[1, 0], [0, 1]], 1, 0).L.tolist(),
                         [[1, 1], [1, 2]])
        self.assertEqual(kirby_stabilize([[2]], -1).L.tolist(),
                         [[2, 0], [0, -1]])
        self.assertEqual(orientation_reverse([[2, 1], [1, 0]]).L.tolist(),
                         [[-2, -1], [-1, 0]])
        self.assertRaises(ValueError, kirby_slide, [[1, 0], [0, 1]], 0, 0)
        self.assertRaises(ValueError, kirby_slide, [[1, 0], [0, 1]], 0, 1, 2)
        self.assertRaises(IndexError, kirby_slide, [[1, 0], [0, 1]], 0, 2)
        self.assertRaises(ValueError, kirby_stabilize, [[1]], 0)
        self.assertRaises(ValueError, apply_moves, [[1]], [('twist', 1)])

    def test_moves_preserve_homology(self):
        rs = random_state(5)
        for _ in range(20):
            L = random_symmetric(rs, 2)
            moves = random_moves(rs, 2, 6)
            before, after = homology(L), homology(apply_moves(L, moves))
            self.assertEqual(before.b1, after.b1)
            self.assertEqual(before.torsion_divisors, after.torsion_divisors)


class TestInvariants(unittest.TestCase):

    def test_sphere(self):
        for strategy in STRATEGIES:
            self.assertEqual(rt_raw_invariant([], [[2]], strategy)
                             .value.to_string(5), '0.70711+0.0j')
        self.assertEqual(cs_raw_invariant([], [[2]]).value.to_string(5),
                         '0.70711+0.0j')
        for L in ([[1]], [[-1]]):
            self.assertEqual(rt_raw_invariant(L, A2_GRAM).value.to_string(5),
                             '0.57735+0.0j')

    def test_handle(self):
        for K in ([[2]], A2_GRAM, [[4]]):
            self.assertEqual(rt_raw_invariant([[0]], K).value.to_string(5),
                             '1.0+0.0j')
            self.assertEqual(cs_raw_invariant([[0]], K).value.to_string(5),
                             '1.0+0.0j')

    def test_values(self):
        self.assertEqual(rt_raw_invariant([[2]], [[2]]).value.to_string(5),
                         '0.0+0.0j')
        self.assertEqual(rt_raw_invariant([[3]], [[2]]).value.to_string(5),
                         '0.0-0.70711j')
        self.assertEqual(cs_raw_invariant([[3]], [[2]]).value.to_string(5),
                         '0.0-0.70711j')
        self.assertEqual(rt_raw_invariant(orientation_reverse([[3]]), [[2]])
                         .value.to_string(5), '0.0+0.70711j')
        self.assertEqual(rt_raw_invariant([[1]], E8_GRAM).value.to_string(5),
                         '1.0+0.0j')

    def test_metadata(self):
        v = rt_raw_invariant([[1, 1], [1, 1]], [[2]], 'reduced')
        self.assertEqual(v.strategy, 'null-separated')
        self.assertEqual((v.m, v.rho, v.nu, v.terms), (2, 1, 1, 2))
        self.assertEqual(v.metadata()['order'], 2)
        v = rt_raw_invariant([[1, 1], [1, 1]], [[2]], 'direct')
        self.assertEqual(v.terms, 4)
        c = cs_raw_invariant([[3]], [[2]])
        self.assertEqual((c.strategy, c.kind, c.terms), ('torsion', 'cs', 3))
        self.assertRaises(ValueError, rt_raw_invariant, [[1]], [[2]], 'bogus')

    def test_strategies_agree(self):
        rs = random_state(21)
        for _ in range(20):
            K = random_even_level(rs, max_n=2, max_det=8)
            L = random_symmetric(rs, int(rs.randint(1, 4)))
            a = rt_raw_invariant(L, K, 'direct')
            b = rt_raw_invariant(L, K, 'null-separated')
            self.assertTrue(approx_equal(a.value, b.value)[0])

    def test_closed_equivalence(self):
        for K, L in (([[2]], [[2]]), ([[2, 0], [0, -2]], [[1, 2], [2, 1]]),
                     ([[4]], [[3]]), ([[6]], [[2, 1], [1, -3]]),
                     ([[2]], [[0, 0], [0, 3]]), (A2_GRAM, [[5]]),
                     ([[2, 1], [1, -2]], [[2, 1], [1, 2]])):
            v = verify_closed_equivalence(L, K)
            self.assertTrue(v.ok, (K, L, v.residual))

    def test_budget(self):
        self.assertRaises(TermBudgetExceeded, rt_raw_invariant,
                          [[2, 0], [0, 2]], [[2]], 'direct', 128, 3)
        self.assertRaises(TermBudgetExceeded, cs_raw_invariant, [[5]],
                          [[2, 0], [0, 2]], 128, 24)

    def test_user_module(self):
        L = [[2, 1], [1, -3]]
        a = rt_raw_invariant(L, FiniteQuadraticModule([4], [['1/4']]))
        b = rt_raw_invariant(L, [[4]])
        self.assertTrue(approx_equal(a.value, b.value)[0])
        c = cyclic_rt_invariant([[3]], 2)
        self.assertEqual(c.value.to_string(5), '0.0-0.70711j')
        self.assertRaises(ValueError, cs_raw_invariant, [[1]], cyclic_module(2))

    def test_q_LK(self):
        self.assertEqual(q_LK([[3]], [[2]], [(1,)]), PhaseQ('3/2'))
        self.assertEqual(q_LK([[3]], FiniteQuadraticModule([2], [['1/2']]),
                              [(1,)]), PhaseQ('3/2'))
        self.assertEqual(q_LK_lifted([[3]], [[2]], [[1]]),
                         q_LK_lifted([[3]], [[2]], [[3]]))
        self.assertEqual(q_LK([], [[2]], []), PhaseQ(0))
        self.assertRaises(DimensionMismatchError, q_LK, [[1]], [[2]], [])

    def test_q_LK_lift_independence(self):
        rs = random_state(11)
        for _ in range(50):
            K = as_int_matrix(random_even_level(rs))
            n = K.shape[0]
            m = int(rs.randint(1, 4))
            L = random_symmetric(rs, m)
            x = [[int(c) for c in rs.randint(-6, 7, n)] for _ in range(m)]
            y = [[int(c) for c in
                  np.array(xi, dtype=object) +
                  K.dot(np.array([int(c) for c in rs.randint(-4, 5, n)],
                                 dtype=object))]
                 for xi in x]
            a, b = q_LK_lifted(L, K, x), q_LK_lifted(L, K, y)
            self.assertEqual(a, b)
            self.assertEqual(a.exponent, b.exponent)
            self.assertIsInstance(a.exponent, Fraction)

    def test_q_LK_matches_any_lift(self):
        rs = random_state(12)
        for _ in range(20):
            K = as_int_matrix(random_even_level(rs))
            M = discriminant_module(K)
            G = list(M.elements())
            L = random_symmetric(rs, 2)
            a = [G[int(rs.randint(len(G)))] for _ in range(2)]
            x = [M.lattice.lift(c) +
                 K.dot(np.array([int(t) for t in
                                 rs.randint(-3, 4, K.shape[0])],
                                dtype=object))
                 for c in a]
            self.assertEqual(q_LK(L, K, a), q_LK_lifted(L, K, x))

    def test_torsion_refinement(self):
        self.assertEqual(torsion_refinement([[3]], [[2]], [1]), PhaseQ('4/3'))
        self.assertEqual(torsion_refinement([[3]], [[2]], [1]),
                         torsion_refinement([[3]], [[2]], [4]))
        self.assertRaises(DimensionMismatchError, torsion_refinement,
                          [[3]], [[2]], [1, 2])

    def test_reciprocity(self):
        v = reciprocity_check([[2, 1], [1, 1]], [[2]])
        self.assertTrue(v.ok)
        self.assertEqual(v.lhs.to_string(5), '0.0+2.0j')
        for A, K in (([[3]], [[2]]), ([[-1]], [[2]]), ([[2]], A2_GRAM),
                     ([[1, 2], [2, -1]], [[2, 0], [0, -2]])):
            self.assertTrue(reciprocity_check(A, K).ok)
        self.assertRaises(ValueError, reciprocity_check, [[0]], [[2]])

    def test_kirby(self):
        moves = [('stabilize', 1), ('slide', 0, 1, -1)]
        self.assertTrue(verify_kirby([[1, 1], [1, 2]], [[2]], moves).ok)
        rs = random_state(9)
        for _ in range(10):
            L = random_symmetric(rs, 2)
            moves = random_moves(rs, 2, 4)
            self.assertTrue(verify_kirby(L, [[2]], moves).ok)

    def test_kirby_preserves_both_scalars(self):
        rs = random_state(13)
        for _ in range(15):
            K = random_even_level(rs, max_n=2, max_det=4)
            L = random_symmetric(rs, int(rs.randint(1, 3)))
            moved = apply_moves(L, random_moves(rs, len(L), 5))
            for f in (rt_raw_invariant, cs_raw_invariant):
                ok, residual = approx_equal(f(L, K).value, f(moved, K).value)
                self.assertTrue(ok, (f.__name__, K, L, moved.L, residual))
            self.assertTrue(verify_kirby(L, K, [('stabilize', -1),
                                                ('slide', 0, 1, 1)]).ok)

    def test_orientation_reverse_conjugates(self):
        rs = random_state(14)
        for _ in range(15):
            K = random_even_level(rs, max_n=2, max_det=6)
            L = random_symmetric(rs, int(rs.randint(1, 3)))
            R = orientation_reverse(L)
            for f in (rt_raw_invariant, cs_raw_invariant):
                a, b = f(L, K).value, f(R, K).value
                self.assertTrue(approx_equal(a.conjugate(), b)[0],
                                (f.__name__, K, L))


suite = unittest.TestLoader().loadTestsFromTestCase(TestPresentation)
suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestInvariants))

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
