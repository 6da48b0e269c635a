try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction
from functools import reduce
import operator

import numpy as np

from torcs.exceptions import DimensionMismatchError, NotSymmetricError
from torcs.intlinalg import *
from torcs.quadmod import E8_GRAM
from torcs.sampling import (random_state, random_symmetric,
                            random_nondegenerate, random_unimodular)


class TestIntLinAlg(unittest.TestCase):

    def setUp(self):
        self.rs = random_state(7)

    def test_as_int_matrix(self):
        A = as_int_matrix([[1, 2], [3, 4]])
        self.assertEqual(A.dtype, object)
        self.assertEqual(A.shape, (2, 2))
        self.assertEqual(as_int_matrix([]).shape, (0, 0))
        self.assertRaises(DimensionMismatchError, as_int_matrix, [[1], [1, 2]])
        self.assertRaises(DimensionMismatchError, as_int_matrix, [[1, 2]],
                          True)
        self.assertRaises(ValueError, as_int_matrix, [[Fraction(1, 2)]])

    def test_determinant(self):
        self.assertEqual(determinant([[1, 2], [3, 4]]), -2)
        self.assertEqual(determinant([]), 1)
        self.assertEqual(determinant(E8_GRAM), 1)
        self.assertEqual(determinant([[1, 1], [1, 1]]), 0)

    def test_smith_normal_form(self):
        self.assertEqual(smith_normal_form([[2, 1], [1, 2]]).divisors, [1, 3])
        self.assertEqual(smith_normal_form([[2, 4], [6, 8]]).divisors, [2, 4])
        snf = smith_normal_form([[1, 1], [1, 1]])
        self.assertEqual(snf.divisors, [1, 0])
        self.assertEqual(snf.rank, 1)

    def test_smith_normal_form_random(self):
        for _ in range(20):
            M = as_int_matrix(random_symmetric(self.rs, 3, -5, 5))
            U, D, V = smith_normal_form(M)
            self.assertTrue((U.dot(M).dot(V) == D).all())
            self.assertTrue(abs(determinant(U)) == 1)
            self.assertTrue(abs(determinant(V)) == 1)
            d = [x for x in smith_normal_form(M).divisors if x]
            for a, b in zip(d, d[1:]):
                self.assertEqual(b % a, 0)

    def test_signature(self):
        self.assertEqual(signature([[0, 1], [1, 0]]), (1, 1, 0))
        self.assertEqual(signature(E8_GRAM), (8, 0, 0))
        self.assertEqual(signature([[0, 0], [0, 0]]).n_zero, 2)
        self.assertEqual(signature([[2, 0], [0, -2]]).sigma, 0)
        self.assertEqual(signature([[Fraction(1, 2)]]).sigma, 1)
        self.assertEqual(signature([[1, 0, 0], [0, 0, 0], [0, 0, -3]])
                         .dimension, 3)
        self.assertRaises(NotSymmetricError, signature, [[0, 1], [0, 0]])

    def test_signature_congruence_invariant(self):
        for m in (2, 3, 4):
            for _ in range(15):
                L = random_symmetric(self.rs, m)
                P = random_unimodular(self.rs, m)
                self.assertEqual(abs(determinant(P)), 1)
                self.assertEqual(signature(L), signature(congruence(L, P)))

    def test_signature_kronecker(self):
        for _ in range(20):
            A = random_symmetric(self.rs, int(self.rs.randint(1, 4)))
            B = random_symmetric(self.rs, int(self.rs.randint(1, 3)))
            self.assertEqual(signature(kronecker(A, B)).sigma,
                             signature(A).sigma * signature(B).sigma)

    def test_block_split_regular_determinant(self):
        for _ in range(20):
            m = int(self.rs.randint(2, 5))
            rho = int(self.rs.randint(1, m))
            A = random_nondegenerate(self.rs, rho)
            L = congruence(direct_sum(A, zeros(m - rho)),
                           random_unimodular(self.rs, m))
            bs = block_split(L)
            self.assertEqual((bs.rank, bs.nullity), (rho, m - rho))
            d = [x for x in smith_normal_form(L).divisors if x]
            self.assertEqual(abs(determinant(bs.L_reg)),
                             reduce(operator.mul, d, 1))
            self.assertEqual(abs(determinant(bs.L_reg)), abs(determinant(A)))
            self.assertEqual(signature(bs.L_reg), signature(A))

    def test_block_split(self):
        bs = block_split([[1, 1], [1, 1]])
        self.assertEqual(bs.L_reg.tolist(), [[1]])
        self.assertEqual((bs.rank, bs.nullity), (1, 1))
        for _ in range(20):
            L = random_symmetric(self.rs, 3)
            U, L_reg, rho, nu = block_split(L)
            D = congruence(as_int_matrix(L), U)
            self.assertTrue((D[:rho, :rho] == L_reg).all())
            self.assertTrue((D[rho:, :] == 0).all())
            self.assertTrue((D[:, rho:] == 0).all())
            self.assertTrue(determinant(L_reg) != 0)
            self.assertEqual(abs(determinant(U)), 1)
            self.assertEqual(rho + nu, 3)

    def test_inverses(self):
        A = [[2, 1], [1, 1]]
        self.assertEqual(rational_inverse(A).tolist(), [[1, -1], [-1, 2]])
        self.assertEqual(integer_inverse(A).tolist(), [[1, -1], [-1, 2]])
        B = rational_inverse([[2]])
        self.assertEqual(B[0, 0], Fraction(1, 2))
        self.assertRaises(ValueError, rational_inverse, [[1, 1], [1, 1]])
        self.assertRaises(ValueError, integer_inverse, [[2]])

    def test_kronecker_and_sums(self):
        A = kronecker([[1, 2], [3, 4]], [[0, 1], [1, 0]])
        self.assertEqual(A.shape, (4, 4))
        self.assertEqual(A[2:, :2].tolist(), [[0, 3], [3, 0]])
        self.assertEqual(direct_sum(identity(1), [[5]]).tolist(),
                         [[1, 0], [0, 5]])
        self.assertTrue(is_even([[2, 1], [1, 4]]))
        self.assertFalse(is_even([[2, 1], [1, 3]]))

    def test_elementary_matrix(self):
        E = elementary_matrix(2, 1, 0, 1)
        self.assertEqual(E.tolist(), [[1, 0], [1, 1]])
        self.assertEqual(congruence([[1, 0], [0, 1]], E).tolist(),
                         [[2, 1], [1, 1]])

    def test_row_basis(self):
        B = row_basis([[1, 1, 0], [2, 2, 0], [0, 1, 1]])
        self.assertEqual(B.shape, (2, 3))
        self.assertEqual(B.tolist(), [[1, 0, -1], [0, 1, 1]])
        self.assertEqual(row_basis([[0, 0]]).shape, (0, 2))


suite = unittest.TestLoader().loadTestsFromTestCase(TestIntLinAlg)

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
