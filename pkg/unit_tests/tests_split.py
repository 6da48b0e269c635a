try:
    import unittest2 as unittest
except ImportError:
    import unittest

from torcs.split import *


class TestSplit(unittest.TestCase):

    def test_mp_split_range(self):
        self.assertEqual(mp_split_range(10, 3), [(0, 4), (4, 7), (7, 10)])
        self.assertEqual(mp_split_range(2, 4), [(0, 1), (1, 2)])
        self.assertEqual(mp_split_range(0, 4), [])
        big = 2 ** 70
        ranges = mp_split_range(big, 3)
        self.assertEqual(ranges[-1][1], big)
        self.assertEqual(sum(b - a for a, b in ranges), big)

    def test_chunk_range(self):
        self.assertEqual(list(chunk_range(0, 5, 2)), [(0, 2), (2, 4), (4, 5)])
        self.assertEqual(list(chunk_range(3, 3, 2)), [])


suite = unittest.TestLoader().loadTestsFromTestCase(TestSplit)

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
