try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction

from torcs.exactnum import ComplexApprox, PhaseQ, approx_equal, get_context
from torcs.exceptions import NotLagrangianError, DimensionMismatchError
from torcs.intlinalg import row_basis
from torcs.quadmod import (A2_GRAM, E8_GRAM, FiniteQuadraticModule,
                           cyclic_module, discriminant_module)
from torcs.sampling import (random_state, random_even_level,
                            random_nondegenerate, random_lagrangian)
from torcs.tqft import *


MODULAR_LEVELS = [[[2]], A2_GRAM, [[2, 0], [0, -2]], [[4]], E8_GRAM,
                  [[6]], [[2, 1], [1, -2]]]


class TestModularData(unittest.TestCase):

    def test_state_space(self):
        V = StateSpace(A2_GRAM, 2)
        self.assertEqual(V.dimension, 9)
        self.assertEqual(len(V), 9)
        labels = list(V.labels())
        self.assertEqual(len(labels), 9)
        self.assertEqual(V.index_of(((1,), (2,))), 5)
        self.assertEqual([V.index_of(x) for x in labels], list(range(9)))
        self.assertEqual(StateSpace([[2]], 0).dimension, 1)
        self.assertRaises(ValueError, StateSpace, A2_GRAM, -1)

    def test_s_and_t(self):
        self.assertEqual(s_matrix([[2]]).to_rows(5),
                         [['0.70711+0.0j', '0.70711+0.0j'],
                          ['0.70711+0.0j', '-0.70711+0.0j']])
        self.assertEqual(t_matrix([[2]]).to_rows(5),
                         [['1.0+0.0j', '0.0+0.0j'],
                          ['0.0+0.0j', '0.0+1.0j']])
        S = s_matrix(A2_GRAM)
        self.assertEqual(S.size, 3)
        self.assertEqual(S[(1,), (1,)].to_string(5), '-0.28868-0.5j')
        self.assertTrue(s_matrix(A2_GRAM, sign=-1).compare(S.adjoint()).ok)
        self.assertRaises(ValueError, s_matrix, A2_GRAM, 128, 2)

    def test_operator_size(self):
        ctx = get_context(128)
        self.assertRaises(ValueError, OperatorMatrix, ctx.matrix(2, 2),
                          StateSpace(A2_GRAM), 128)

    def test_hopf(self):
        self.assertEqual(hopf_pairing(A2_GRAM, (1,), (1,)), PhaseQ('4/3'))
        self.assertEqual(hopf_matrix([[2]]).to_rows(5),
                         [['1.0+0.0j', '1.0+0.0j'],
                          ['1.0+0.0j', '-1.0+0.0j']])

    def test_charge_conjugation(self):
        C = charge_conjugation(A2_GRAM)
        self.assertEqual(C[1, 2].to_string(5), '1.0+0.0j')
        self.assertEqual(C[1, 1].to_string(5), '0.0+0.0j')
        self.assertTrue(C.dot(C).compare(C.identity()).ok)

    def test_modular_relations(self):
        for K in MODULAR_LEVELS:
            r = modular_relations_check(K)
            self.assertTrue(r.ok, K)
        self.assertEqual(modular_relations_check(A2_GRAM).signature, 2)
        M = FiniteQuadraticModule([4], [['-1/4']])
        r = modular_relations_check(M)
        self.assertTrue(r.ok)
        self.assertEqual(r.signature, 7)

    def test_literal_st_relation_is_informational(self):
        self.assertTrue(modular_relations_check([[2]]).st_cubed_literal.ok)
        r = modular_relations_check([[4]])
        self.assertTrue(r.ok)
        self.assertTrue(r.st_cubed.ok)
        self.assertFalse(r.st_cubed_literal.ok)
        self.assertEqual([name for name, _ in r.checks], list(r.CHECKS))

    def test_modular_relations_random(self):
        rs = random_state(13)
        for _ in range(5):
            self.assertTrue(modular_relations_check(
                random_even_level(rs, max_n=2, max_det=12)).ok)

    def test_dimensions(self):
        self.assertEqual(genus_g_dimension(A2_GRAM, 2), 9)
        self.assertEqual(genus_g_dimension(A2_GRAM, 0), 1)
        self.assertEqual(genus_g_dimension(E8_GRAM, 5), 1)
        self.assertRaises(ValueError, genus_g_dimension, A2_GRAM, -1)
        self.assertEqual(cylinder_scalar([[2]], 2).to_string(5), '2.0+0.0j')
        self.assertEqual(cylinder_scalar(A2_GRAM, 1).to_string(5),
                         '1.7321+0.0j')
        self.assertRaises(ValueError, cylinder_scalar, A2_GRAM, -2)


class TestWeights(unittest.TestCase):

    def test_extended_correct(self):
        x = extended_correct(1, 1, [[2]])
        self.assertEqual(x.corrected.to_string(5), '0.70711+0.70711j')
        self.assertEqual(x.sigma_K, 1)
        self.assertEqual(extended_correct(1, 9, [[2]]).weight_class, 1)
        self.assertEqual(extended_correct(1, -1, [[2]]).weight_class, 7)
        raw = ComplexApprox(2)
        for K in ([[2]], A2_GRAM, [[2, 0], [0, -2]]):
            self.assertTrue(approx_equal(extended_correct(raw, 8, K)
                                         .corrected, raw)[0])
        self.assertEqual(extended_correct(1, 5, E8_GRAM).corrected
                         .to_string(5), '1.0+0.0j')

    def test_closure_weight(self):
        for L_reg, K in (([[1]], [[2]]), ([[2, 1], [1, -1]], A2_GRAM),
                         ([[-3]], [[4]]), ([[1, 0], [0, 1]], E8_GRAM)):
            self.assertTrue(closure_weight_consistency(L_reg, K).ok)
        rs = random_state(17)
        for _ in range(10):
            L_reg = random_nondegenerate(rs, int(rs.randint(1, 4)))
            K = random_even_level(rs, max_n=2, max_det=16)
            self.assertTrue(closure_weight_consistency(L_reg, K).ok)
        self.assertRaises(ValueError, closure_weight_consistency,
                          [[1, 1], [1, 1]], [[2]])

    def test_lens_spaces(self):
        for K in ([[2]], A2_GRAM, [[4]], cyclic_module(6),
                  discriminant_module([[2, 0], [0, -2]])):
            for p in range(-3, 4):
                v = lens_space_consistency(p, K)
                self.assertTrue(v.ok, (K, p, v.residual))
        v = lens_space_consistency(0, A2_GRAM)
        self.assertEqual(v.lhs.to_string(5), '1.0+0.0j')


class TestMaslov(unittest.TestCase):

    def setUp(self):
        self.t = LagrangianTriple([[1, 0]], [[0, 1]], [[1, 1]])

    def test_example(self):
        self.assertEqual(maslov_index(self.t), -1)
        self.assertEqual(toral_maslov_index(self.t, A2_GRAM), -2)
        self.assertEqual(toral_maslov_index(self.t, [[2, 0], [0, -2]]), 0)
        self.assertEqual(self.t.h, 1)

    def test_symmetries(self):
        self.assertEqual(maslov_index(self.t.permuted((1, 0, 2))), 1)
        self.assertEqual(maslov_index(self.t.permuted((1, 2, 0))), -1)
        self.assertEqual(maslov_index(self.t.permuted((0, 2, 1))), 1)

    def test_degenerate_triples(self):
        t = LagrangianTriple([[1, 0]], [[1, 0]], [[0, 1]])
        self.assertEqual(maslov_index(t), 0)

    def test_custom_form(self):
        t = LagrangianTriple([[1, 0]], [[0, 1]], [[1, 1]],
                             omega=[[0, 2], [-2, 0]])
        self.assertEqual(maslov_index(t), -1)
        self.assertRaises(ValueError, LagrangianTriple, [[1, 0]], [[0, 1]],
                          [[1, 1]], [[1, 0], [0, 1]])

    def test_validation(self):
        J = standard_symplectic_form(2)
        self.assertFalse(is_lagrangian(row_basis([[1, 0, 0, 0],
                                                  [0, 0, 1, 0]]), J))
        self.assertTrue(is_lagrangian(row_basis([[1, 0, 0, 0],
                                                 [0, 1, 0, 0]]), J))
        self.assertRaises(NotLagrangianError, LagrangianTriple,
                          [[1, 0, 0, 0], [0, 0, 1, 0]], [[1, 0, 0, 0]],
                          [[0, 1, 0, 0]])
        self.assertRaises(NotLagrangianError, LagrangianTriple,
                          [[1, 0], [0, 1]], [[0, 1]], [[1, 1]])
        self.assertRaises(DimensionMismatchError, LagrangianTriple,
                          [[1, 0]], [[0, 1]], [[1, 0, 0]])

    def test_cocycle(self):
        rs = random_state(23)
        mu = lambda a, b, c: maslov_index(LagrangianTriple(a, b, c))
        for h in (1, 2, 2, 3):
            for _ in range(5):
                L1, L2, L3, L4 = [random_lagrangian(rs, h) for _ in range(4)]
                self.assertEqual(mu(L2, L3, L4) - mu(L1, L3, L4) +
                                 mu(L1, L2, L4) - mu(L1, L2, L3), 0)
                self.assertEqual(mu(L1, L2, L3), -mu(L2, L1, L3))
                self.assertEqual(mu(L1, L2, L3), mu(L3, L1, L2))


suite = unittest.TestLoader().loadTestsFromTestCase(TestModularData)
suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestWeights))
suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestMaslov))

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
