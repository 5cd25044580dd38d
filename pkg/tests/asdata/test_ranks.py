import pathlib
import tempfile
import unittest

from kdense.asdata import RankedList, load_ranks, rank_overlap, top_n_by_metric
from kdense.errors import DomainError


class TestRankedList(unittest.TestCase):
    def test_top(self):
        ranked = RankedList((('3', 9.0), ('1', 5.0), ('2', 5.0)), 'degree')
        self.assertEqual(ranked.top(2), ['3', '1'])
        self.assertEqual(ranked.top(0), [])
        with self.assertRaises(DomainError):
            ranked.top(4)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            RankedList((('1', 1.0), ('1', 0.5)))
        with self.assertRaises(DomainError):
            RankedList((('1', 1.0), ('2', 2.0)))

    def test_frame(self):
        frame = RankedList((('3', 9.0), ('1', 5.0))).to_frame()
        self.assertEqual(frame['rank'].tolist(), [1, 2])
        self.assertEqual(frame['as_token'].tolist(), ['3', '1'])


class TestTopN(unittest.TestCase):
    def test_ties_by_token(self):
        ranked = top_n_by_metric({'10': 3, '9': 3, '2': 5, '1': 1}, 3, 'degree')
        self.assertEqual(ranked.tokens, ['2', '9', '10'])
        self.assertEqual(ranked.metric_name, 'degree')

    def test_too_many(self):
        with self.assertRaises(DomainError):
            top_n_by_metric({'1': 1}, 2)


class TestRankOverlap(unittest.TestCase):
    def test_overlap(self):
        ranked = RankedList((('1', 4.0), ('2', 3.0), ('3', 2.0), ('4', 1.0)))
        self.assertEqual(rank_overlap({'1', '3', '7'}, ranked, 2), 1)
        self.assertEqual(rank_overlap({'1', '3', '7'}, ranked, 4), 2)
        self.assertEqual(rank_overlap(set(), ranked, 4), 0)


class TestLoadRanks(unittest.TestCase):
    def _load(self, name: str, text: str, metric_name=None):
        with tempfile.TemporaryDirectory() as tmp:
            path = pathlib.Path(tmp, name)
            path.write_text(text)
            return load_ranks(path, metric_name)

    def test_header_and_order(self):
        ranked = self._load('cone.2013.csv',
                            'rank,as_token,score\n2,174,80\n1,3356,100\n')
        self.assertEqual(ranked.tokens, ['3356', '174'])
        self.assertEqual(ranked.metric_name, 'cone')

    def test_without_header(self):
        ranked = self._load('x.csv', '1,7018,5.5\n', 'transit')
        self.assertEqual(ranked.entries, (('7018', 5.5),))
        self.assertEqual(ranked.metric_name, 'transit')

    def test_invalid(self):
        for text in ('a,1,2\n', '1,2\n', '1,2,3\n2,3,4\n'):
            with self.assertRaises(DomainError):
                self._load('bad.csv', text)


if __name__ == '__main__':
    unittest.main()
