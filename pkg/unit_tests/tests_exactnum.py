try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction

from torcs.exactnum import *
from torcs.sampling import random_state


class TestPhaseQ(unittest.TestCase):

    def test_canonical_exponent(self):
        self.assertEqual(PhaseQ(5).exponent, 1)
        self.assertEqual(PhaseQ(-1).exponent, 1)
        self.assertEqual(PhaseQ('-1/4').exponent, Fraction(7, 4))
        self.assertEqual(PhaseQ(Fraction(9, 2)), PhaseQ('1/2'))
        self.assertTrue(PhaseQ(2).is_zero())

    def test_arithmetic(self):
        self.assertEqual(PhaseQ('3/2') + PhaseQ('3/4'), PhaseQ('1/4'))
        self.assertEqual(phase_add(PhaseQ('1/2'), PhaseQ('1/2')), PhaseQ(1))
        self.assertEqual(phase_neg(PhaseQ('1/3')), PhaseQ('5/3'))
        self.assertEqual(phase_scale(PhaseQ('2/3'), 3), PhaseQ(0))
        self.assertEqual(PhaseQ('1/2') - PhaseQ(1), PhaseQ('3/2'))
        self.assertEqual(PhaseQ(PhaseQ('1/3')), PhaseQ('1/3'))

    def test_group_laws(self):
        rs = random_state(3)

        def draw():
            return PhaseQ(Fraction(int(rs.randint(-40, 41)),
                                   int(rs.randint(1, 13))))

        zero = PhaseQ(0)
        for _ in range(100):
            a, b, c = draw(), draw(), draw()
            self.assertEqual(phase_add(phase_add(a, b), c),
                             phase_add(a, phase_add(b, c)))
            self.assertEqual(phase_add(a, b), phase_add(b, a))
            self.assertEqual(phase_add(a, zero), a)
            self.assertEqual(phase_add(a, phase_neg(a)), zero)
            self.assertTrue(0 <= phase_add(a, b).exponent < 2)
            self.assertEqual(phase_scale(a, 3), phase_add(a, phase_add(a, a)))

    def test_scale_needs_integer(self):
        self.assertRaises(TypeError, lambda: PhaseQ('1/2') * Fraction(1, 2))
        self.assertRaises(TypeError, lambda: PhaseQ('1/2') * True)

    def test_hash(self):
        self.assertEqual(len(set([PhaseQ(0), PhaseQ(2), PhaseQ(-2)])), 1)

    def test_eval(self):
        self.assertEqual(phase_eval('1/4').to_string(5), '0.70711+0.70711j')
        self.assertEqual(phase_eval(1).to_string(5), '-1.0+0.0j')
        self.assertEqual(PhaseQ('3/2').eval().to_string(5), '0.0-1.0j')


class TestComplexApprox(unittest.TestCase):

    def test_exact_lift(self):
        x = exact(Fraction(1, 3), 128)
        self.assertEqual(x.prec, 128)
        self.assertEqual(x.to_string(6), '0.333333+0.0j')

    def test_digits(self):
        self.assertEqual(ComplexApprox(1, 256).digits(), 64)
        self.assertEqual(ComplexApprox(1, 64).digits(), 16)

    def test_arithmetic_keeps_smaller_precision(self):
        a = ComplexApprox(1, 256)
        b = ComplexApprox(2, 128)
        self.assertEqual((a + b).prec, 128)
        self.assertEqual((a * Fraction(1, 2)).to_string(5), '0.5+0.0j')
        self.assertEqual((1 - a).to_string(5), '0.0+0.0j')

    def test_integer_powers_only(self):
        a = phase_eval('1/2')
        self.assertEqual((a ** 2).to_string(5), '-1.0+0.0j')
        self.assertRaises(TypeError, lambda: a ** Fraction(1, 2))

    def test_real_power(self):
        self.assertEqual(real_power(4, Fraction(1, 2)).to_string(5),
                         '2.0+0.0j')
        self.assertEqual(real_power(2, -1).to_string(5), '0.5+0.0j')
        self.assertEqual(real_power(2, '-1/2').to_string(5),
                         '0.70711+0.0j')
        self.assertRaises(ValueError, real_power, 0, 1)
        self.assertRaises(ValueError, real_power, 2, Fraction(1, 3))

    def test_approx_equal(self):
        a = phase_eval('1/4') ** 8
        ok, residual = approx_equal(a, 1)
        self.assertTrue(ok)
        self.assertTrue(residual < tolerance(DEFAULT_PRECISION))
        ok, _ = approx_equal(ComplexApprox(1), ComplexApprox(1 + 1e-10))
        self.assertFalse(ok)

    def test_tolerance_scales(self):
        self.assertTrue(tolerance(128, 1000) > tolerance(128))
        self.assertEqual(tolerance(128, 0.5), tolerance(128))

    def test_context_cache(self):
        self.assertTrue(get_context(128) is get_context(128))
        self.assertRaises(ValueError, get_context, MIN_PRECISION - 1)


suite = unittest.TestLoader().loadTestsFromTestCase(TestPhaseQ)
suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestComplexApprox))

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
