try:
    import unittest2 as unittest
except ImportError:
    import unittest
import multiprocessing as mp

from torcs.suite import *


class TestSuite(unittest.TestCase):

    def test_build_cases(self):
        cases = build_cases(seed=1, cases=2)
        names = [c[0] for c in cases]
        self.assertEqual(list(CRITERIA), sorted(set(names), key=names.index))
        self.assertEqual(len([n for n in names if n == 'sphere']),
                         len(FIXED_LEVELS))
        self.assertEqual(len([n for n in names if n == 'cyclic']), 6)
        self.assertEqual(build_cases(seed=1, cases=2), cases)
        self.assertNotEqual(build_cases(seed=2, cases=2), cases)
        self.assertRaises(ValueError, build_cases, 0, 1, ['nonsense'])

    def test_strategy_replays_equivalence(self):
        cases = build_cases(seed=5, cases=3,
                            criteria=['equivalence', 'strategy'])
        pairs = dict((n, []) for n in ('equivalence', 'strategy'))
        for name, _, params, _, _ in cases:
            pairs[name].append(params)
        self.assertEqual(pairs['equivalence'], pairs['strategy'])

    def test_run_case(self):
        for case in build_cases(seed=0, cases=2,
                                criteria=['sphere', 'handle', 'cyclic',
                                          'weights', 'maslov']):
            r = run_case(case)
            self.assertTrue(r.ok, r)
            self.assertFalse(r.skipped)
            self.assertEqual(r.error, None)

    def test_budget(self):
        case = ('strategy', 0, ([[2]], [[1, 0], [0, 1]]), 128, 1)
        r = run_case(case)
        self.assertTrue(r.ok and r.skipped)
        case = ('equivalence', 0, ([[2]], [[3]]), 128, 1)
        r = run_case(case)
        self.assertFalse(r.ok)
        self.assertTrue('budget' in r.error)

    @unittest.skipIf(mp.cpu_count() < 2, 'needs two cores')
    def test_runners(self):
        cases = build_cases(seed=3, cases=2,
                            criteria=['sphere', 'equivalence', 'kirby'])
        runner = SuiteRunner(cases)
        self.assertTrue(isinstance(runner, SuiteRunnerSeq))
        seq = runner.run()
        multi = SuiteRunner(cases, multiprocessing=True, n_proc=2)
        self.assertTrue(isinstance(multi, SuiteRunnerMulti))
        self.assertEqual([(r.criterion, r.index, r.ok) for r in seq],
                         [(r.criterion, r.index, r.ok) for r in multi.run()])
        self.assertTrue(all(r.ok for r in seq))

    def test_summarize(self):
        results = [CaseResult('a', 0, True, 0, False, None),
                   CaseResult('a', 1, False, None, False, 'boom'),
                   CaseResult('b', 0, True, 2, True, None)]
        s = summarize(results)
        self.assertEqual(list(s), ['a', 'b'])
        self.assertEqual((s['a']['cases'], s['a']['failed'],
                          s['a']['max_residual']), (2, 1, 0))
        self.assertEqual(s['b']['skipped'], 1)


suite = unittest.TestLoader().loadTestsFromTestCase(TestSuite)

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
