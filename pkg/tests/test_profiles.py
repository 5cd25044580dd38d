import math
import unittest

from hypothesis import given
from hypothesis import strategies as st
import networkx as nx

from kdense import profiles
from kdense.decomposition import k_dense_decomposition
from kdense.errors import DegenerateCoreError, DegenerateRangeError, DomainError
from kdense.graph import Graph, SnapshotMeta

from tests.strategies import gnp_graphs


def _clique_with_tail() -> Graph:
    clique = [(str(a), str(b)) for a, b in nx.complete_graph(range(1, 7)).edges()]
    return Graph.from_edges(clique + [('6', '7'), ('7', '8')])


def _xy(p: profiles.Profile):
    return [(pnt.x, pnt.y) for pnt in p.points]


class TestNormalizeIndex(unittest.TestCase):
    def test_endpoints(self):
        self.assertEqual(profiles.normalize_index(2, 2, 7), 0.0)
        self.assertEqual(profiles.normalize_index(7, 2, 7), 1.0)
        self.assertEqual(profiles.normalize_index(4, 2, 6), 0.5)

    def test_degenerate(self):
        with self.assertRaises(DegenerateRangeError):
            profiles.normalize_index(2, 2, 2)

    def test_out_of_range(self):
        for k in (1, 8):
            with self.assertRaises(DomainError):
                profiles.normalize_index(k, 2, 7)

    @given(st.integers(2, 50), st.integers(1, 50), st.data())
    def test_monotone(self, k_min, span, data):
        k_max = k_min + span
        k1 = data.draw(st.integers(k_min, k_max))
        k2 = data.draw(st.integers(k1, k_max))
        x1 = profiles.normalize_index(k1, k_min, k_max)
        x2 = profiles.normalize_index(k2, k_min, k_max)
        self.assertTrue(0 <= x1 <= x2 <= 1)


class TestSnapshotProfiles(unittest.TestCase):
    def setUp(self):
        self.g = _clique_with_tail()
        self.d = k_dense_decomposition(self.g)

    def test_node_fraction(self):
        p = profiles.node_fraction_profile(self.d, self.g.node_count)
        self.assertEqual(_xy(p), [(0.0, 0.25), (1.0, 0.75)])
        self.assertEqual([pnt.k for pnt in p.points], [2, 6])

    def test_link_fraction(self):
        p = profiles.link_fraction_profile(self.d, self.g.edge_count)
        self.assertEqual(_xy(p), [(0.0, 2 / 17), (1.0, 15 / 17)])

    def test_attachment(self):
        p = profiles.attachment_profile(self.g, self.d)
        self.assertEqual(_xy(p), [(0.0, 2 / 17), (1.0, 16 / 17)])

    def test_set_to_set(self):
        p = profiles.set_to_set_profile(self.g, self.d, 2)
        self.assertEqual(_xy(p), [(0.0, 0.5), (1.0, 0.5)])
        self.assertEqual(p.name, 'set_to_set(2)')
        p = profiles.set_to_set_profile(self.g, self.d, 6)
        self.assertEqual(_xy(p), [(0.0, 1 / 16), (1.0, 15 / 16)])

    def test_set_to_set_empty_set(self):
        with self.assertRaises(DomainError):
            profiles.set_to_set_profile(self.g, self.d, 4)

    def test_triangle_free_snapshot_has_single_point(self):
        g = Graph.from_networkx(nx.star_graph(4))
        d = k_dense_decomposition(g)
        p = profiles.node_fraction_profile(d, g.node_count)
        self.assertEqual(_xy(p), [(0.0, 1.0)])

    def test_frame(self):
        frame = profiles.node_fraction_profile(self.d, 8).to_frame()
        self.assertEqual(list(frame.columns), ['kind', 'k', 'x', 'y'])
        self.assertEqual(frame['kind'].tolist(), ['node_fraction'] * 2)

    @given(gnp_graphs(max_nodes=30))
    def test_fractions_sum_to_one(self, g):
        d = k_dense_decomposition(g)
        total_nodes = profiles.node_fraction_profile(d, g.node_count).total
        total_links = profiles.link_fraction_profile(d, g.edge_count).total
        self.assertAlmostEqual(total_nodes, 1.0, delta=1e-9)
        self.assertAlmostEqual(total_links, 1.0, delta=1e-9)
        attached = profiles.attachment_profile(g, d).total
        self.assertTrue(1.0 - 1e-9 <= attached <= 2.0 + 1e-9)
        for k, size in d.set_sizes().items():
            linked = any(g.degree(v) for v in range(g.node_count)
                         if d.node_index[v] == k)
            if size and linked:
                p = profiles.set_to_set_profile(g, d, k)
                self.assertAlmostEqual(p.total, 1.0, delta=1e-9)


class TestBinning(unittest.TestCase):
    def test_bin_profile(self):
        d = k_dense_decomposition(_clique_with_tail())
        p = profiles.bin_profile(profiles.node_fraction_profile(d, 8), 0.05)
        self.assertEqual(p.bin_width, 0.05)
        self.assertEqual(len(p.points), 2)
        self.assertAlmostEqual(p.points[0].x, 0.025)
        self.assertAlmostEqual(p.points[1].x, 0.975)
        self.assertIsNone(p.points[0].k)

    def test_merges_points(self):
        p = profiles.Profile('node_fraction', (
            profiles.ProfilePoint(0.0, 0.2, 2), profiles.ProfilePoint(0.25, 0.3, 3),
            profiles.ProfilePoint(0.5, 0.1, 4), profiles.ProfilePoint(1.0, 0.4, 6)))
        binned = profiles.bin_profile(p, 0.5)
        self.assertEqual(_xy(binned), [(0.25, 0.5), (0.75, 0.5)])

    def test_invalid_width(self):
        p = profiles.Profile('node_fraction', ())
        for width in (0, -0.1, 1.5):
            with self.assertRaises(DomainError):
                profiles.bin_profile(p, width)

    @given(gnp_graphs(max_nodes=30), st.sampled_from([0.05, 0.1, 0.3, 1.0]))
    def test_preserves_mass(self, g, width):
        d = k_dense_decomposition(g)
        p = profiles.link_fraction_profile(d, g.edge_count)
        self.assertAlmostEqual(profiles.bin_profile(p, width).total, p.total,
                               delta=1e-9)


def _single_bin(y: float) -> profiles.Profile:
    return profiles.Profile('node_fraction', (profiles.ProfilePoint(0.025, y),),
                            bin_width=0.05)


class TestAggregateProfiles(unittest.TestCase):
    def setUp(self):
        d = k_dense_decomposition(_clique_with_tail())
        self.binned = profiles.bin_profile(profiles.node_fraction_profile(d, 8))

    def test_identical_snapshots(self):
        agg = profiles.aggregate_profiles([self.binned, self.binned])
        self.assertEqual(len(agg.bins), 20)
        filled = [b for b in agg.bins if b.n]
        self.assertEqual(len(filled), 2)
        for b in filled:
            self.assertEqual(b.n, 2)
            self.assertEqual(b.min, b.max)
            self.assertEqual(b.p10, b.p90)
        self.assertIsNone(agg.bins[5].mean)
        self.assertEqual(agg.bins[-1].bin_hi, 1.0)

    def test_spread_across_snapshots(self):
        ps = [_single_bin(y) for y in (2.0, 1.0, 3.0)]
        bin0 = profiles.aggregate_profiles(ps).bins[0]
        self.assertEqual((bin0.mean, bin0.min, bin0.max, bin0.n),
                         (2.0, 1.0, 3.0, 3))
        self.assertEqual((bin0.p10, bin0.p90), (1.0, 3.0))

    @given(st.permutations([0.1, 0.4, 0.4, 0.7, 0.9, 0.25]))
    def test_order_of_snapshots(self, ys):
        agg = profiles.aggregate_profiles([_single_bin(y) for y in ys])
        ref = profiles.aggregate_profiles(
            [_single_bin(y) for y in sorted(ys)])
        self.assertEqual(agg, ref)

    def test_frame(self):
        frame = profiles.aggregate_profiles([self.binned]).to_frame()
        self.assertEqual(len(frame), 20)
        self.assertEqual(frame['kind'].iloc[0], 'node_fraction')

    def test_invalid(self):
        with self.assertRaises(DomainError):
            profiles.aggregate_profiles([])
        other = profiles.bin_profile(self.binned, 0.1)
        with self.assertRaises(DomainError):
            profiles.aggregate_profiles([self.binned, other])
        raw = profiles.Profile('node_fraction', ())
        with self.assertRaises(DomainError):
            profiles.aggregate_profiles([raw])


class TestSummaries(unittest.TestCase):
    def setUp(self):
        self.g = _clique_with_tail()
        self.d = k_dense_decomposition(self.g)

    def test_set_summary(self):
        summary = profiles.set_summary(self.g, self.d, 6)
        self.assertEqual(summary.n, 6)
        self.assertAlmostEqual(summary.mean_degree, 31 / 6)
        self.assertAlmostEqual(summary.mean_clustering, (5 + 2 / 3) / 6)
        with self.assertRaises(DomainError):
            profiles.set_summary(self.g, self.d, 3)

    def test_summary_levels(self):
        self.assertEqual(profiles.summary_levels(self.d), [2, 6])

    def test_degree_by_index(self):
        frame = profiles.degree_by_index(self.g, self.d)
        self.assertEqual(frame['k'].tolist(), [2, 6])
        self.assertEqual(frame['mean'].tolist()[0], 1.5)
        self.assertEqual(frame['n'].tolist(), [2, 6])

    def test_index_by_degree(self):
        series = profiles.index_by_degree(self.g, self.d)
        self.assertEqual(sum(b.n for b in series.bins), 8)

    def test_core_record(self):
        rec = profiles.core_record(self.g, self.d)
        self.assertEqual(rec, profiles.CoreRecord(6, 6, 15, 1.0))

    def test_core_record_triangle_free(self):
        with self.assertRaises(DegenerateCoreError):
            profiles.core_record(Graph.from_networkx(nx.star_graph(3)))


class TestGrowthTable(unittest.TestCase):
    def test_cliques(self):
        metas, k_maxs = [], []
        for n in (4, 5, 6):
            g = Graph.from_networkx(nx.complete_graph(n))
            metas.append(SnapshotMeta(f'k{n}', g.node_count, g.edge_count))
            k_maxs.append(k_dense_decomposition(g).k_max)
        frame = profiles.growth_table(metas, k_maxs)
        self.assertEqual(frame['k_max'].tolist(), [4, 5, 6])
        self.assertEqual(frame['k_max_ratio'].tolist(), [1.0, 1.25, 1.5])
        self.assertEqual(frame['node_ratio'].tolist(), [1.0, 1.25, 1.5])
        self.assertTrue(math.isclose(frame['avg_degree_ratio'].iloc[2], 5 / 3))
        self.assertTrue(frame['fit_ratio'].isna().all())

    def test_fit_ratio(self):
        metas = [SnapshotMeta('a', 1000, 3000), SnapshotMeta('b', 2000, 7000)]
        frame = profiles.growth_table(metas, [10, 12])
        expected = (1.3 * math.log(2000) - 7.5) / (1.3 * math.log(1000) - 7.5)
        self.assertAlmostEqual(frame['fit_ratio'].iloc[1], expected)
        self.assertEqual(frame['avg_degree'].tolist(), [6.0, 7.0])

    def test_mismatch(self):
        with self.assertRaises(DomainError):
            profiles.growth_table([SnapshotMeta('a', 3, 3)], [])


if __name__ == '__main__':
    unittest.main()
