try:
    import unittest2 as unittest
except ImportError:
    import unittest
from fractions import Fraction
import io
import os
from tempfile import NamedTemporaryFile

from torcs.document import *
from torcs.exceptions import InputFormatError


DOC = """# A2 level, lens space L(5, 1)
[K]
2 -1
-1 2
[L]
5
[options]
precision = 128
strategy = direct
"""

MODULE_DOC = """[module]
4
1/4
[L]
2 1
1 -3
"""


class TestDocument(unittest.TestCase):

    def test_parse(self):
        doc = parse_document(DOC)
        self.assertEqual(doc.K, [[2, -1], [-1, 2]])
        self.assertEqual(doc.L, [[5]])
        self.assertEqual(doc.module, None)
        self.assertEqual(dict(doc.options),
                         {'precision': 128, 'strategy': 'direct'})
        self.assertEqual(doc.quadratic_module().order, 3)

    def test_module_section(self):
        doc = parse_document(MODULE_DOC)
        self.assertEqual(doc.module, ([4], [[Fraction(1, 4)]]))
        self.assertEqual(doc.quadratic_module().divisors, (4,))
        self.assertEqual(doc.L, [[2, 1], [1, -3]])

    def test_empty_link(self):
        doc = parse_document('[K]\n2\n[L]\n')
        self.assertEqual(doc.L, [])
        self.assertEqual(parse_document('[K]\n2\n').L, None)
        self.assertEqual(parse_document('[K]\n2\n').with_link([]).L, [])

    def test_round_trip(self):
        for text in (DOC, MODULE_DOC, '[K]\n2\n[L]\n'):
            doc = parse_document(text)
            self.assertEqual(parse_document(doc.to_text()), doc)
            self.assertEqual(parse_document(doc.to_text()).to_text(),
                             doc.to_text())

    def test_errors(self):
        cases = [('[K]\n2\n[X]\n1\n', 3),
                 ('2\n[K]\n2\n', 1),
                 ('[K]\n2\n[K]\n2\n', 3),
                 ('[K]\n2 a\n', 2),
                 ('[L]\n1\n', 1),
                 ('[K]\n2\n[module]\n2\n1/2\n', 1),
                 ('[K]\n[L]\n1\n', 1),
                 ('[K]\n2\n[options]\nprecision\n', 4),
                 ('[K]\n2\n[options]\ncolor = 3\n', 4),
                 ('[K]\n2\n[options]\nprecision = 32\n', 4),
                 ('[K]\n2\n[options]\nstrategy = fast\n', 4),
                 ('[K]\n2\n[options]\nseed = -1\n', 4),
                 ('[module]\n2\n1/x\n', 3)]
        for text, line in cases:
            try:
                parse_document(text)
            except InputFormatError as e:
                self.assertEqual(e.lineno, line, (text, str(e)))
            else:
                self.fail('accepted {0!r}'.format(text))

    def test_invalid_level(self):
        try:
            parse_document('# odd\n[K]\n1\n')
        except InputFormatError as e:
            self.assertEqual(e.lineno, 2)
            self.assertTrue('not even' in str(e))
        else:
            self.fail('odd level accepted')
        self.assertRaises(InputFormatError, parse_document, '[K]\n0\n')
        self.assertRaises(InputFormatError, parse_document,
                          '[K]\n2\n[L]\n1 2\n0 1\n')
        self.assertRaises(InputFormatError, parse_document,
                          '[module]\n2\n1\n')
        doc = parse_document('[K]\n1\n', validate=False)
        self.assertEqual(doc.K, [[1]])

    def test_constructor(self):
        self.assertRaises(InputFormatError, InputDocument)
        self.assertRaises(InputFormatError, InputDocument, [[2]], None,
                          ([2], [['1/2']]))

    def test_resolved(self):
        doc = parse_document(DOC)
        opts = doc.resolved()
        self.assertEqual(opts['precision'], 128)
        self.assertEqual(opts['budget'], OPTION_DEFAULTS['budget'])
        self.assertEqual(opts['seed'], 0)
        opts = doc.resolved({'precision': 512, 'seed': None})
        self.assertEqual(opts['precision'], 512)
        self.assertEqual(opts['seed'], 0)
        self.assertEqual(parse_document('[K]\n2\n').resolved()['strategy'],
                         'reduced')

    def test_check_option(self):
        self.assertEqual(check_option('precision', 64), 64)
        self.assertRaises(InputFormatError, check_option, 'precision', 63)
        self.assertRaises(InputFormatError, check_option, 'budget', 0)
        self.assertRaises(InputFormatError, check_option, 'seed', 2 ** 64)

    def test_manifest(self):
        docs = parse_documents(DOC + '%%\n' + MODULE_DOC)
        self.assertEqual(len(docs), 2)
        self.assertEqual(parse_documents(documents_to_text(docs)), docs)
        self.assertRaises(InputFormatError, parse_documents, '# nothing\n')
        try:
            parse_documents('[K]\n2\n%%\n[K]\n3\n')
        except InputFormatError as e:
            self.assertEqual(e.lineno, 4)
        else:
            self.fail('odd level accepted')

    def test_read_documents(self):
        tmp = NamedTemporaryFile(delete=False, suffix='.txt')
        tmp.close()
        try:
            with io.open(tmp.name, 'w', encoding='utf8') as f:
                f.write(DOC)
            docs = read_documents(tmp.name)
            self.assertEqual(docs, [parse_document(DOC)])
        finally:
            os.remove(tmp.name)

    def test_load_manifest(self):
        docs = load_manifest()
        self.assertEqual(len(docs), 12)
        self.assertTrue(all(d.K is not None and d.L is not None
                            for d in docs))
        self.assertEqual(docs[0].L, [])


suite = unittest.TestLoader().loadTestsFromTestCase(TestDocument)

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
