try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction

from torcs.exactnum import approx_equal, real_power
from torcs.quadmod import A2_GRAM, discriminant_module, cyclic_module
from torcs.surgery import *


# every level here has |G| <= 4 so that the brute-force integral stays small
LEVELS = [[[2]], [[4]], [[2, 0], [0, -2]], A2_GRAM]

LINKS = [[[0]], [[1]], [[-2]], [[3]], [[1, 1], [1, 1]], [[2, 1], [1, -1]],
         [[0, 1], [1, 0]], [[0, 0], [0, 0]], [[1, 2], [2, -3]]]


class TestHaar(unittest.TestCase):

    def test_examples(self):
        M = discriminant_module([[2]])
        self.assertEqual(haar_functional(M, [[0]]).to_string(5), '2.0+0.0j')
        self.assertEqual(haar_functional(M, [[0]], measure='probability')
                         .to_string(5), '1.0+0.0j')
        self.assertEqual(haar_functional(M, []).to_string(5), '1.0+0.0j')
        self.assertEqual(haar_functional([[2]], [[1]]).to_string(5),
                         '1.0+0.0j')

    def test_gauss_factors(self):
        M = discriminant_module([[2]])
        a, b = gauss_factors(M)
        self.assertEqual(a.to_string(5), '1.0+1.0j')
        self.assertEqual(b.to_string(5), '1.0-1.0j')
        a, b = gauss_factors(M, measure='probability')
        self.assertEqual(a.to_string(5), '0.5+0.5j')

    def test_bridge_exponent(self):
        self.assertEqual(haar_bridge_exponent(1), -1)
        self.assertEqual(haar_bridge_exponent(0), Fraction(-1, 2))
        self.assertEqual(haar_bridge_exponent(0, 'probability'),
                         Fraction(-1, 2))
        self.assertEqual(haar_bridge_exponent(3, 'probability'), 1)
        self.assertRaises(ValueError, haar_bridge_exponent, 0, 'lebesgue')
        self.assertRaises(ValueError, haar_functional, [[2]], [[1]], 128,
                          'lebesgue')

    def test_brute_force_oracle(self):
        for K in LEVELS:
            M = discriminant_module(K)
            for L in LINKS:
                P = SurgeryPresentation(L)
                sig = P.signature_triple
                for measure in MEASURES:
                    alpha_p, alpha_m = gauss_factors(M, measure=measure)
                    expected = brute_force_integral(M, L, measure=measure)
                    if sig.n_plus:
                        expected = expected / alpha_p ** sig.n_plus
                    if sig.n_minus:
                        expected = expected / alpha_m ** sig.n_minus
                    tau = haar_functional(M, L, measure=measure)
                    ok, residual = approx_equal(tau, expected)
                    self.assertTrue(ok, (K, L, measure, residual))

    def test_bridge(self):
        for K in LEVELS:
            M = discriminant_module(K)
            for L in LINKS:
                rt = rt_raw_invariant(L, M, 'direct').value
                b1 = homology(L).b1
                for measure in MEASURES:
                    tau = haar_functional(M, L, measure=measure)
                    e = haar_bridge_exponent(b1, measure)
                    rhs = real_power(M.order, e) * tau
                    ok, residual = approx_equal(rt, rhs)
                    self.assertTrue(ok, (K, L, measure, residual))

    def test_user_module(self):
        M = cyclic_module(4)
        rt = rt_raw_invariant([[2, 1], [1, 2]], M, 'direct').value
        tau = haar_functional(M, [[2, 1], [1, 2]])
        self.assertTrue(approx_equal(rt, real_power(4, Fraction(-1, 2)) *
                                     tau)[0])


suite = unittest.TestLoader().loadTestsFromTestCase(TestHaar)

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
