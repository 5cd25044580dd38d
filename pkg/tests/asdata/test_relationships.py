from concurrent.futures import ThreadPoolExecutor
import io
import pathlib
import tempfile
import unittest

from hypothesis import given, settings

from kdense.asdata import (CustomerCones, RelationshipGraph, cone_distribution,
                           cone_weight, customer_cone, load_relationships,
                           load_weights)
from kdense.errors import DomainError, ParseError

from tests import oracles
from tests.strategies import dags


SAMPLE = b"""# provider|customer|-1 or peer|peer|0
1|2|-1
1|3|-1
2|4|-1|bgp
3|4|-1
4|5|-1
2|3|0
6|1|0
"""


def _parse(text: bytes) -> RelationshipGraph:
    return load_relationships(io.BytesIO(text))


class TestLoadRelationships(unittest.TestCase):
    def test_sample(self):
        r = _parse(SAMPLE)
        self.assertEqual(r.ases, ['1', '2', '3', '4', '5', '6'])
        self.assertEqual(len(r.p2c_edges), 5)
        self.assertEqual(r.peer_edges, frozenset({('2', '3'), ('1', '6')}))
        self.assertEqual(r.customers('1'), ['2', '3'])

    def test_repeated_relation_collapses(self):
        r = _parse(b'1|2|-1\n1|2|-1\n3|4|0\n4|3|0\n')
        self.assertEqual(len(r.p2c_edges), 1)
        self.assertEqual(len(r.peer_edges), 1)

    def test_conflicts(self):
        for text in (b'1|2|-1\n1|2|0\n', b'1|2|-1\n2|1|-1\n', b'1|2|0\n2|1|-1\n'):
            with self.assertRaises(ParseError) as ctx:
                _parse(text)
            self.assertIn('line 1', str(ctx.exception))

    def test_malformed(self):
        for text in (b'1|2\n', b'1|2|1\n', b'1||-1\n', b'1|1|-1\n',
                     b'1|2|-1|x|y\n', b'\xff|2|-1\n'):
            with self.assertRaises(ParseError):
                _parse(text)

    def test_duplicate_relation_in_constructor(self):
        with self.assertRaises(DomainError):
            RelationshipGraph([('1', '2')], [('2', '1')])
        with self.assertRaises(DomainError):
            RelationshipGraph([('1', '1')])


class TestCustomerCone(unittest.TestCase):
    def setUp(self):
        self.r = _parse(SAMPLE)

    def test_sample(self):
        self.assertEqual(customer_cone(self.r, '1'),
                         frozenset({'1', '2', '3', '4', '5'}))
        self.assertEqual(customer_cone(self.r, '4'), frozenset({'4', '5'}))
        self.assertEqual(customer_cone(self.r, '6'), frozenset({'6'}))
        self.assertEqual(cone_weight(self.r, '2'), 3)

    def test_peers_are_not_followed(self):
        self.assertNotIn('3', customer_cone(self.r, '2'))

    def test_unknown_as(self):
        with self.assertRaises(DomainError):
            customer_cone(self.r, '42')

    def test_cycle(self):
        r = RelationshipGraph([('1', '2'), ('2', '3'), ('3', '1')])
        for a in '123':
            self.assertEqual(customer_cone(r, a), frozenset('123'))

    @settings(deadline=None)
    @given(dags())
    def test_matches_transitive_closure(self, data):
        nodes, p2c = data
        r = RelationshipGraph(p2c)
        expected = oracles.transitive_cones(r.ases, p2c)
        for a in r.ases:
            self.assertEqual(customer_cone(r, a), expected[a])
            for b in r.customers(a):
                self.assertLessEqual(customer_cone(r, b), customer_cone(r, a))

    def test_weights(self):
        weights = {'2': 10, '4': 2.5, '5': 1}
        self.assertEqual(cone_weight(self.r, '1', weights), 13.5)
        self.assertEqual(cone_weight(self.r, '6', weights), 0)


class TestCustomerCones(unittest.TestCase):
    @settings(deadline=None, max_examples=30)
    @given(dags())
    def test_threaded_lookups(self, data):
        nodes, p2c = data
        r = RelationshipGraph(p2c)
        cones = CustomerCones(r)
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(cones.cone, r.ases * 3))
        self.assertEqual(results, [customer_cone(r, a) for a in r.ases * 3])
        self.assertEqual(len(cones), len(r))


class TestConeDistribution(unittest.TestCase):
    def setUp(self):
        self.r = _parse(SAMPLE)

    def test_counts(self):
        self.assertEqual(cone_distribution(self.r),
                         [(1, 2), (2, 1), (3, 2), (5, 1)])

    def test_subset(self):
        with self.assertLogs('kdense.asdata.relationships', 'WARNING'):
            dist = cone_distribution(self.r, subset=['1', '4', '99'])
        self.assertEqual(dist, [(2, 1), (5, 1)])

    def test_weighted(self):
        dist = cone_distribution(self.r, ['2', '3'], {'4': 0.5, '2': 1})
        self.assertEqual(dist, [(0.5, 1), (1.5, 1)])


class TestLoadWeights(unittest.TestCase):
    def _load(self, text: str):
        with tempfile.TemporaryDirectory() as tmp:
            path = pathlib.Path(tmp, 'weights.csv')
            path.write_text(text)
            return load_weights(path)

    def test_with_header(self):
        self.assertEqual(self._load('as_token,weight\n1,3\n2,0.5\n'),
                         {'1': 3, '2': 0.5})

    def test_without_header(self):
        self.assertEqual(self._load('# addresses\n7, 256\n'), {'7': 256})

    def test_invalid(self):
        for text in ('1,-3\n', '1,abc\n', '1\n'):
            with self.assertRaises(DomainError):
                self._load(text)


if __name__ == '__main__':
    unittest.main()
