try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction
import multiprocessing as mp

from torcs.exactnum import PhaseQ, ComplexApprox, approx_equal
from torcs.exceptions import *
from torcs.quadmod import *
from torcs.sampling import random_state, random_even_level


class TestFiniteQuadraticModule(unittest.TestCase):

    def setUp(self):
        self.M = discriminant_module([[2]])
        self.A2 = discriminant_module(A2_GRAM)

    def test_discriminant_module(self):
        self.assertEqual(self.M.divisors, (2,))
        self.assertEqual(self.M.q_value((1,)), PhaseQ('1/2'))
        self.assertEqual(self.A2.divisors, (3,))
        self.assertEqual(self.A2.q_value((1,)), PhaseQ('2/3'))
        self.assertEqual(self.A2.q_value((2,)), PhaseQ('2/3'))
        self.assertEqual(self.M.provenance, 'lattice')

    def test_unimodular_level(self):
        E8 = discriminant_module(E8_GRAM)
        self.assertEqual(E8.order, 1)
        self.assertEqual(E8.rank, 0)
        self.assertEqual(list(E8.elements()), [()])
        self.assertTrue(E8.is_modular())

    def test_elements_and_indices(self):
        M = discriminant_module([[2, 0], [0, -2]])
        self.assertEqual(M.order, 4)
        elements = list(M.elements())
        self.assertEqual(elements, [(0, 0), (0, 1), (1, 0), (1, 1)])
        for i, a in enumerate(elements):
            self.assertEqual(M.index_of(a), i)
            self.assertEqual(M.element_at(i), a)
        self.assertRaises(ElementRangeError, M.element_at, 4)
        self.assertRaises(ElementRangeError, M.q_value, (2, 0))
        self.assertRaises(DimensionMismatchError, M.q_value, (1,))

    def test_group_operations(self):
        M = cyclic_module(4)
        self.assertEqual(M.add((3,), (2,)), (1,))
        self.assertEqual(M.neg((1,)), (3,))
        self.assertEqual(M.scale((3,), 3), (1,))
        self.assertEqual(M.reduce((-5,)), (3,))
        self.assertEqual(M.exponent, 4)

    def test_bicharacter(self):
        for a in self.A2.elements():
            for b in self.A2.elements():
                self.assertEqual(self.A2.bicharacter(a, b),
                                 self.A2.q_value(self.A2.add(a, b)) -
                                 self.A2.q_value(a) - self.A2.q_value(b))
        self.assertEqual(bicharacter(self.M, (1,), (1,)), PhaseQ(1))

    def test_quadratic_homogeneity(self):
        M = cyclic_module(6)
        for a in M.elements():
            for n in range(-3, 4):
                self.assertEqual(M.q_value(M.scale(a, n)), M.q_value(a) * n * n)

    def test_q_table(self):
        table = q_table(cyclic_module(4))
        self.assertEqual([q for _, q in table],
                         [PhaseQ(0), PhaseQ('1/4'), PhaseQ(1), PhaseQ('1/4')])
        self.assertEqual(q_value(cyclic_module(4), (2,)), PhaseQ(1))

    def test_user_module(self):
        M = FiniteQuadraticModule([4], [['1/4']])
        self.assertEqual(M.q_value((1,)), PhaseQ('1/4'))
        self.assertTrue(M.same_values(discriminant_module([[4]])))
        self.assertTrue(cyclic_module(4).same_values(M))
        self.assertFalse(cyclic_module(4).same_values(
            FiniteQuadraticModule([4], [['-1/4']])))

    def test_trivial_factors_dropped(self):
        M = FiniteQuadraticModule([1, 2], [[0, 0], [0, '1/2']])
        self.assertEqual(M.divisors, (2,))
        self.assertEqual(M.order, 2)

    def test_ill_defined(self):
        self.assertRaises(IllDefinedFormError, FiniteQuadraticModule, [3],
                          [['1/2']])
        self.assertRaises(IllDefinedFormError, FiniteQuadraticModule, [2],
                          [['1/4']])
        self.assertRaises(DimensionMismatchError, FiniteQuadraticModule,
                          [2, 2], [['1/2']])
        self.assertRaises(ValueError, FiniteQuadraticModule, [0], [[0]])

    def test_degenerate(self):
        self.assertRaises(DegenerateModuleError, FiniteQuadraticModule, [2],
                          [[1]])
        M = FiniteQuadraticModule([2], [[1]], check_nondegenerate=False)
        self.assertEqual(nondegeneracy_radical(M), [(1,)])
        self.assertFalse(M.is_modular())
        self.assertEqual(nondegeneracy_radical(self.A2), [])

    def test_cyclic_module(self):
        self.assertRaises(ValueError, cyclic_module, 3)
        self.assertRaises(ValueError, cyclic_module, 0)
        self.assertEqual(cyclic_module(2).provenance, 'cyclic')

    def test_orthogonal_sum(self):
        M = orthogonal_sum(cyclic_module(2), cyclic_module(2))
        self.assertEqual(M.order, 4)
        self.assertEqual(gauss_sum(M).to_string(5), '0.0+2.0j')


class TestLevels(unittest.TestCase):

    def test_check_level(self):
        self.assertRaises(OddLatticeError, check_level, [[1]])
        self.assertRaises(OddLatticeError, check_level, [[2, 1], [1, 3]])
        self.assertRaises(DegenerateLatticeError, check_level, [[0]])
        self.assertRaises(DegenerateLatticeError, check_level,
                          [[2, 2], [2, 2]])
        self.assertRaises(NotSymmetricError, check_level, [[2, 1], [0, 2]])
        self.assertRaises(DimensionMismatchError, check_level, [[2, 0]])

    def test_lift_round_trip(self):
        rs = random_state(3)
        for _ in range(10):
            M = discriminant_module(random_even_level(rs, max_n=2,
                                                      max_det=30))
            for a in M.elements():
                self.assertEqual(M.lattice.coordinates(M.lattice.lift(a)), a)


class TestGaussSums(unittest.TestCase):

    def test_gauss_sum(self):
        self.assertEqual(gauss_sum(discriminant_module([[2]])).to_string(5),
                         '1.0+1.0j')
        self.assertEqual(gauss_sum(discriminant_module([[2]]), -1)
                         .to_string(5), '1.0-1.0j')
        self.assertEqual(gauss_sum(discriminant_module(A2_GRAM)).to_string(5),
                         '0.0+1.7321j')
        self.assertEqual(gauss_sum(discriminant_module(E8_GRAM)).to_string(5),
                         '1.0+0.0j')
        self.assertRaises(ValueError, gauss_sum, cyclic_module(2), 2)

    def test_milgram(self):
        for K in ([[2]], A2_GRAM, E8_GRAM, [[2, 0], [0, -2]], [[4]]):
            self.assertTrue(milgram_check(K).ok)
        rs = random_state(11)
        for _ in range(20):
            self.assertTrue(milgram_check(random_even_level(rs, 3, 200)).ok)

    def test_anomaly_kappa(self):
        self.assertEqual(anomaly_kappa([[2]]).to_string(5), '0.70711-0.70711j')
        self.assertEqual(anomaly_kappa(E8_GRAM).to_string(5), '1.0+0.0j')

    def test_module_signature(self):
        self.assertEqual(module_signature(cyclic_module(4)), 1)
        self.assertEqual(module_signature(discriminant_module(A2_GRAM)), 2)
        self.assertEqual(module_signature(
            FiniteQuadraticModule([4], [['-1/4']])), 7)

    def test_coset_gauss_sum(self):
        value, terms = coset_gauss_sum([[2]], [[Fraction(1, 2)]], 1)
        self.assertEqual(terms, 2)
        self.assertEqual(value.to_string(5), '1.0+1.0j')
        self.assertRaises(ValueError, coset_gauss_sum, [[0]], [[1]])

    def test_budget(self):
        Q = [[Fraction(1, 2), 0, 0], [0, Fraction(1, 2), 0],
             [0, 0, Fraction(1, 2)]]
        self.assertRaises(TermBudgetExceeded, quadratic_sum, [2, 2, 2], Q,
                          1, 128, 4)
        value, terms = quadratic_sum([2, 2, 2], Q, 1, 128, 8)
        self.assertEqual(terms, 8)
        ok, _ = approx_equal(value, gauss_sum(cyclic_module(2), 1, 128) ** 3)
        self.assertTrue(ok)

    @unittest.skipIf(mp.cpu_count() < 2, 'needs two cores')
    def test_histogram_seq_multi(self):
        P = [[2, 1], [1, 2]]
        seq = PhaseHistogram([6, 5], P, 12)
        self.assertTrue(isinstance(seq, PhaseHistogramSeq))
        multi = PhaseHistogram([6, 5], P, 12, multiprocessing=True, n_proc=2)
        self.assertTrue(isinstance(multi, PhaseHistogramMulti))
        self.assertEqual(seq.tally(), multi.tally())
        self.assertEqual(sum(seq.tally().values()), 30)


suite = unittest.TestLoader().loadTestsFromTestCase(TestFiniteQuadraticModule)
suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestLevels))
suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestGaussSums))

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
