try:
    import unittest2 as unittest
except ImportError:
    import unittest
from contextlib import redirect_stdout
import io
import json
import os
from tempfile import NamedTemporaryFile

from torcs.cli import main, build_parser
from torcs.document import parse_documents
from torcs.report import extract_echo


SPHERE = '[K]\n2\n[L]\n'

RP3 = '[K]\n2\n[L]\n2\n'

LENS = '[K]\n2 -1\n-1 2\n[L]\n5\n[options]\nprecision = 128\n'


def run(argv):
    out = io.StringIO()
    with redirect_stdout(out):
        status = main(argv)
    return status, out.getvalue()


def section(report, title):
    for s in report['sections']:
        if s['title'] == title:
            return s['entries']
    raise KeyError(title)


class TestCli(unittest.TestCase):

    def setUp(self):
        self.paths = []

    def tearDown(self):
        for path in self.paths:
            os.remove(path)

    def write(self, text):
        tmp = NamedTemporaryFile(delete=False, suffix='.txt')
        tmp.close()
        with io.open(tmp.name, 'w', encoding='utf8') as f:
            f.write(text)
        self.paths.append(tmp.name)
        return tmp.name

    def test_parser(self):
        args = build_parser().parse_args(['verify', 'kirby', '--cases', '3'])
        self.assertEqual((args.which, args.cases, args.input),
                         ('kirby', 3, None))
        self.assertRaises(SystemExit, build_parser().parse_args,
                          ['verify', 'everything'])

    def test_invariant_sphere(self):
        status, out = run(['invariant', self.write(SPHERE), '--machine'])
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertEqual(report['status'], 'pass')
        rt = section(report, 'rt')
        cs = section(report, 'cs')
        self.assertTrue(rt['value'].startswith('0.70710678118654752440'))
        self.assertEqual(rt['value'], cs['value'])
        self.assertEqual(rt['strategy'], 'null-separated')
        self.assertEqual(section(report, 'homology')['b1'], '0')
        self.assertEqual(section(report, 'agreement')['ok'], 'pass')

    def test_invariant_values(self):
        status, out = run(['invariant', self.write(RP3), '--machine'])
        self.assertEqual(status, 0)
        self.assertEqual(section(json.loads(out), 'rt')['value'], '0.0+0.0j')
        status, out = run(['invariant', self.write(LENS), '--machine',
                           '--strategy', 'direct'])
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertEqual(section(report, 'options')['precision'], '128')
        self.assertEqual(section(report, 'rt')['strategy'], 'direct')
        self.assertEqual(section(report, 'homology')['torsion'], '5')

    def test_flag_precedence(self):
        status, out = run(['invariant', self.write(LENS), '--machine',
                           '--precision', '64'])
        self.assertEqual(section(json.loads(out), 'options')['precision'],
                         '64')

    def test_text_report(self):
        path = self.write(RP3 + '%%\n' + LENS)
        status, out = run(['invariant', path])
        self.assertEqual(status, 0)
        self.assertTrue('[case 1 rt]' in out)
        self.assertTrue(out.endswith('status: pass\n'))
        self.assertEqual(parse_documents(extract_echo(out)),
                         parse_documents(RP3 + '%%\n' + LENS))
        self.assertEqual(run(['invariant', path]), (status, out))

    def test_missing_link(self):
        path = self.write('[K]\n2\n')
        status, out = run(['invariant', path])
        self.assertEqual(status, 1)
        self.assertTrue('InputFormatError' in out)
        status, out = run(['invariant', path, '--empty-link', '--machine'])
        self.assertEqual(status, 0)
        self.assertTrue(section(json.loads(out), 'rt')['value']
                        .startswith('0.7071067811'))

    def test_rejected_input(self):
        status, out = run(['invariant', self.write('[K]\n1\n[L]\n1\n'),
                           '--machine'])
        self.assertEqual(status, 1)
        report = json.loads(out)
        self.assertEqual(report['errors'], ['InputFormatError'])
        self.assertEqual(section(report, 'error')['line'], '1')
        status, out = run(['invariant', self.write(RP3), '--precision',
                           '32'])
        self.assertEqual(status, 1)
        status, out = run(['invariant', '/nonexistent/torcs/input.txt'])
        self.assertEqual(status, 1)

    def test_verify(self):
        path = self.write(RP3 + '%%\n' + LENS)
        for which in ('equivalence', 'milgram', 'reciprocity', 'modular',
                      'weights'):
            status, out = run(['verify', which, path])
            self.assertEqual(status, 0, out)
        status, out = run(['verify', 'kirby', path, '--cases', '3',
                           '--machine'])
        self.assertEqual(status, 0, out)
        kirby = section(json.loads(out), 'case 0 kirby')
        self.assertEqual((kirby['cases'], kirby['failed']), ('3', '0'))

    def test_verify_weights_lens(self):
        status, out = run(['verify', 'weights', self.write(LENS),
                           '--machine'])
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertEqual(section(report, 'weights')['n'], '1')
        self.assertEqual(section(report, 'lens')['ok'], 'pass')

    def test_user_module(self):
        path = self.write('[module]\n4\n1/4\n[L]\n3\n')
        status, out = run(['modular-data', path, '--machine'])
        self.assertEqual(status, 0)
        module = section(json.loads(out), 'module')
        self.assertEqual(module['signature'], '1')
        self.assertEqual(module['q'][1], '(1,): 1/4')
        status, out = run(['verify', 'milgram', path])
        self.assertEqual(status, 1)
        self.assertTrue('needs a lattice level' in out)

    def test_modular_data(self):
        status, out = run(['modular-data', self.write(RP3), '--machine'])
        self.assertEqual(status, 0)
        report = json.loads(out)
        module = section(report, 'module')
        self.assertEqual(module['order'], '2')
        self.assertTrue(module['kappa'].startswith('0.70710678'))
        self.assertTrue('-0.70710678' in module['kappa'])
        self.assertEqual(len(module['S']), 2)
        self.assertEqual(section(report, 'st_cubed')['ok'], 'pass')
        literal = section(report, 'st_cubed_literal')
        self.assertEqual((literal['holds'], literal['counted']), ('pass', 'no'))
        status, out = run(['modular-data', self.write('[K]\n4\n'),
                           '--machine'])
        self.assertEqual(status, 0, out)
        report = json.loads(out)
        self.assertEqual(section(report, 'st_cubed_literal')['holds'], 'fail')
        self.assertEqual(report['failures'], [])

    def test_report_suite(self):
        status, out = run(['report-suite', '--cases', '1', '--criteria',
                           'sphere', 'milgram', 'maslov', '--machine'])
        self.assertEqual(status, 0, out)
        report = json.loads(out)
        self.assertEqual(section(report, 'sphere')['cases'], '5')
        self.assertEqual(section(report, 'milgram')['failed'], '0')
        self.assertEqual(section(report, 'maslov')['cases'], '1')


suite = unittest.TestLoader().loadTestsFromTestCase(TestCli)

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
