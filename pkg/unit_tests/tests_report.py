try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction
import json

import numpy as np

from torcs.document import parse_documents
from torcs.exactnum import ComplexApprox, PhaseQ, Verdict, phase_eval
from torcs.exceptions import InputFormatError
from torcs.report import *


class TestFormat(unittest.TestCase):

    def test_scalars(self):
        self.assertEqual(format_entry(Fraction(-1, 2)), '-1/2')
        self.assertEqual(format_entry(3), '3')
        self.assertEqual(format_entry(True), 'pass')
        self.assertEqual(format_entry(False), 'fail')
        self.assertEqual(format_entry(PhaseQ('1/4')), 'exp(i*pi*1/4)')
        self.assertEqual(format_entry('direct'), 'direct')

    def test_complex(self):
        z = phase_eval('1/4', 64)
        self.assertEqual(format_entry(z, 5), '0.70711+0.70711j')
        self.assertEqual(len(format_entry(z).split('+')[0]), 18)

    def test_residual(self):
        ctx = phase_eval(0, 64).ctx
        self.assertEqual(format_entry(ctx.mpf(0)), '0.0')
        self.assertEqual(format_residual(ctx.mpf('1.234567e-30')),
                         '1.2346e-30')

    def test_collections(self):
        self.assertEqual(format_entry([3, 5]), '3, 5')
        self.assertEqual(format_entry(np.array([[1, 0], [0, 1]],
                                               dtype=object)),
                         ['1 0', '0 1'])
        self.assertEqual(format_entry([['a', 'b'], ['c', 'd']]),
                         ['a  b', 'c  d'])


class TestReport(unittest.TestCase):

    def setUp(self):
        self.report = Report('verify milgram', '[K]\n2\n',
                             {'precision': 64})

    def test_text(self):
        v = Verdict(True, phase_eval(0, 64).ctx.mpf(0), ComplexApprox(1, 64),
                    ComplexApprox(1, 64))
        self.report.add_verdict('milgram', v)
        text = str(self.report)
        lines = text.splitlines()
        self.assertEqual(lines[0], 'command: verify milgram')
        self.assertEqual(lines[1], 'option.precision: 64')
        self.assertTrue('[milgram]' in lines)
        self.assertEqual(lines[-1], 'status: pass')
        self.assertTrue(self.report.ok)

    def test_failures(self):
        v = Verdict(False, phase_eval(0, 64).ctx.mpf(1), None, None)
        self.report.add_verdict('milgram', v)
        self.assertFalse(self.report.ok)
        self.assertEqual(self.report.failures, ['milgram'])
        self.assertTrue(str(self.report).endswith('status: fail\n'))

    def test_errors(self):
        self.report.add_error(InputFormatError('bad row', 3), case=1)
        self.assertEqual(self.report.errors, ['InputFormatError'])
        d = self.report.to_dict()
        self.assertEqual(d['sections'][0]['title'], 'error 1')
        self.assertEqual(d['sections'][0]['entries']['line'], '3')
        self.assertEqual(d['status'], 'fail')

    def test_json(self):
        s = self.report.section('level')
        s.add('order', 2)
        s.add('S', [['1', '1'], ['1', '-1']])
        d = json.loads(self.report.to_json())
        self.assertEqual(d['command'], 'verify milgram')
        self.assertEqual(d['options'], {'precision': 64})
        self.assertEqual(d['sections'][0]['entries']['order'], '2')
        self.assertEqual(d['sections'][0]['entries']['S'],
                         ['1  1', '1  -1'])

    def test_echo(self):
        text = '[K]\n2\n[L]\n3\n%%\n[K]\n4\n[L]\n\n'
        self.report.echo = text
        docs = parse_documents(text)
        self.assertEqual(parse_documents(extract_echo(str(self.report))),
                         docs)
        self.assertEqual(parse_documents(extract_echo(self.report.to_json())),
                         docs)
        self.assertRaises(ValueError, extract_echo, 'status: pass\n')


suite = unittest.TestLoader().loadTestsFromTestCase(TestFormat)
suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestReport))

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
