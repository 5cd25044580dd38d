import unittest

from hypothesis import given, settings
import networkx as nx

from kdense.errors import DomainError
from kdense.graph import Graph
from kdense.nullmodels import degree_sequence, joint_degree_matrix
from kdense.nullmodels.swaps import SwapEngine, swap_count

from tests.strategies import gnp_graphs


def _rewire(g: Graph, preserve: str, seed: int, n_swaps: int) -> Graph:
    engine = SwapEngine(g.node_count, g.edge_array().tolist(), preserve, seed,
                        validate=True)
    engine.run(n_swaps)
    return Graph(g.labels, engine.edges)


class TestSwapEngine(unittest.TestCase):
    @settings(deadline=None)
    @given(gnp_graphs(min_nodes=4, max_nodes=30, min_edges=2))
    def test_degree_preserving(self, g):
        out = _rewire(g, 'degree', 7, 5 * g.edge_count)
        self.assertEqual(out.degrees().tolist(), g.degrees().tolist())
        self.assertEqual(out.edge_count, g.edge_count)

    @settings(deadline=None)
    @given(gnp_graphs(min_nodes=4, max_nodes=30, min_edges=2))
    def test_joint_degree_preserving(self, g):
        out = _rewire(g, 'joint_degree', 11, 5 * g.edge_count)
        self.assertEqual(joint_degree_matrix(out), joint_degree_matrix(g))
        self.assertEqual(degree_sequence(out), degree_sequence(g))

    def test_seeded(self):
        g = Graph.from_networkx(nx.gnm_random_graph(30, 80, seed=3))
        self.assertEqual(_rewire(g, 'degree', 5, 200),
                         _rewire(g, 'degree', 5, 200))

    def test_rigid_graph_stops(self):
        g = Graph.from_networkx(nx.complete_graph(5))
        engine = SwapEngine(g.node_count, g.edge_array().tolist(), 'degree', 0)
        self.assertEqual(engine.run(10, max_proposals=500), 0)
        self.assertEqual(engine.proposed, 500)
        self.assertEqual(sorted(engine.edges), sorted(g.edges))

    def test_too_few_edges(self):
        engine = SwapEngine(2, [(0, 1)], 'degree', 0)
        self.assertEqual(engine.run(10), 0)

    def test_unknown_mode(self):
        with self.assertRaises(DomainError):
            SwapEngine(2, [(0, 1)], 'triangles')


class TestSwapCount(unittest.TestCase):
    def test_ceil(self):
        self.assertEqual(swap_count(7, 1.5), 11)
        self.assertEqual(swap_count(10, 10), 100)

    def test_positive_factor(self):
        with self.assertRaises(DomainError):
            swap_count(10, 0)


if __name__ == '__main__':
    unittest.main()
