try:
    import unittest2 as unittest
except ImportError:
    import unittest
from contextlib import redirect_stdout
import io
import multiprocessing as mp

from torcs.cli import main
from torcs.document import load_manifest
from torcs.suite import CRITERIA, SuiteRunner, build_cases, summarize
from torcs.surgery import verify_closed_equivalence


def run(argv):
    out = io.StringIO()
    with redirect_stdout(out):
        status = main(argv)
    return status, out.getvalue()


class TestAcceptance(unittest.TestCase):

    def test_manifest_equivalence(self):
        for doc in load_manifest():
            v = verify_closed_equivalence(doc.L, doc.K, prec=128)
            self.assertTrue(v.ok, (doc, v.residual))

    def test_manifest_commands(self):
        for argv in (['invariant'], ['verify', 'equivalence'],
                     ['verify', 'milgram'], ['verify', 'reciprocity'],
                     ['verify', 'modular'], ['verify', 'weights'],
                     ['verify', 'kirby', '--cases', '5'], ['modular-data']):
            status, out = run(argv + ['--precision', '128'])
            self.assertEqual(status, 0, out)

    def test_suite(self):
        results = SuiteRunner(build_cases(seed=0, cases=5, prec=128)).run()
        summary = summarize(results)
        self.assertEqual(list(summary), list(CRITERIA))
        for name, s in summary.items():
            self.assertEqual(s['failed'], 0, (name, s))
            if name != 'strategy':
                self.assertEqual(s['skipped'], 0)

    def test_reports_are_deterministic(self):
        argv = ['report-suite', '--cases', '3', '--criteria', 'equivalence',
                'reciprocity', 'haar', '--seed', '42']
        first = run(argv)
        self.assertEqual(first[0], 0, first[1])
        self.assertEqual(run(argv), first)

    @unittest.skipIf(mp.cpu_count() < 2, 'needs two cores')
    def test_parallel_reports_match(self):
        argv = ['report-suite', '--cases', '3', '--criteria', 'equivalence',
                'kirby', 'modular', '--seed', '7']
        self.assertEqual(run(argv + ['--n-proc', '2'])[1], run(argv)[1])


suite = unittest.TestLoader().loadTestsFromTestCase(TestAcceptance)

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
