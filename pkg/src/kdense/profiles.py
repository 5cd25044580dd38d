"""kdense/profiles.py -- Normalized decomposition profiles.

Licensed under the terms of the BSD-3-Clause license.

Decompositions of snapshots of different size are compared by mapping
each k-dense-index k to the k-dense-index fraction
x = (k - k_min) / (k_max - k_min), and node or link counts to fractions of
the snapshot totals.

Classes:
    AggregatedProfile   Per-bin statistics across snapshots.
    CoreRecord          Size and density of H_kMAX.
    Profile             (x, y) points of one snapshot.
    SetSummary          Average node properties of a k-dense-set.

Functions:
    aggregate_profiles      Statistics of binned profiles.
    attachment_profile      Fraction of links attached to each k-dense-set.
    bin_profile             Linear binning of a profile.
    core_record             Size and density of H_kMAX.
    degree_by_index         Degree distribution per k-dense-set.
    growth_table            Growth ratios across snapshots.
    index_by_degree         k-dense-index distribution per degree range.
    link_fraction_profile   Fraction of links per k-dense-shell.
    node_fraction_profile   Fraction of nodes per k-dense-set.
    normalize_index         k-dense-index fraction.
    set_summary             Average properties of a k-dense-set.
    set_to_set_profile      Where links attached to one set lead to.
"""
from dataclasses import dataclass
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from . import _defaults
from . import tools
from . decomposition import DenseDecomposition, extract_kmax_core
from . errors import DegenerateRangeError, DomainError
from . graph import (Graph, SnapshotMeta, average_degree, average_degree_fit,
                     density)
from . metrics import binning, structure
from . types import Array


PROFILE_KINDS = ('node_fraction', 'link_fraction', 'attachment', 'set_to_set')

_EPS = 1e-12


@dataclass(frozen=True)
class ProfilePoint:
    """Point of a profile. ``k`` is ``None`` for binned profiles."""
    x: float
    y: float
    k: Optional[int] = None


@dataclass(frozen=True)
class Profile:
    """Normalized profile of one snapshot.

    Attributes:
        kind:       One of ``PROFILE_KINDS``.
        points:     Points with strictly increasing x.
        k0:         Reference set of ``set_to_set`` profiles.
        bin_width:  Bin width if the profile is binned.
    """
    kind: str
    points: Tuple[ProfilePoint, ...]
    k0: Optional[int] = None
    bin_width: Optional[float] = None

    @property
    def name(self) -> str:
        """Return the kind, qualified by k0 for set-to-set profiles."""
        if self.kind == 'set_to_set':
            return f'set_to_set({self.k0})'
        return self.kind

    @property
    def total(self) -> float:
        """Return the sum of y values."""
        return math.fsum(pnt.y for pnt in self.points)

    def to_frame(self) -> pd.DataFrame:
        """Return the profile as data frame with columns kind, k, x, y."""
        return pd.DataFrame(
            [(self.name, pnt.k, pnt.x, pnt.y) for pnt in self.points],
            columns=['kind', 'k', 'x', 'y'])


@dataclass(frozen=True)
class AggregatedBin:
    """Statistics of one bin across snapshots.

    Statistics are ``None`` if no snapshot contributes to the bin.
    """
    bin_lo: float
    bin_hi: float
    mean: Optional[float]
    p10: Optional[float]
    p90: Optional[float]
    min: Optional[float]
    max: Optional[float]
    n: int


@dataclass(frozen=True)
class AggregatedProfile:
    """Binned profiles aggregated across snapshots."""
    kind: str
    bin_width: float
    bins: Tuple[AggregatedBin, ...]

    def to_frame(self) -> pd.DataFrame:
        """Return the bins as data frame."""
        frame = pd.DataFrame([vars(b) for b in self.bins],
                             columns=['bin_lo', 'bin_hi', 'mean', 'p10', 'p90',
                                      'min', 'max', 'n'])
        frame.insert(0, 'kind', self.kind)
        return frame


@dataclass(frozen=True)
class SetSummary:
    """Average properties of the nodes in a k-dense-set."""
    k: int
    n: int
    mean_degree: float
    mean_clustering: float
    mean_betweenness: float


@dataclass(frozen=True)
class CoreRecord:
    """Size and density of H_kMAX."""
    k_max: int
    node_count: int
    link_count: int
    density: float


def normalize_index(k: int, k_min: int, k_max: int) -> float:
    """Return the k-dense-index fraction (k - k_min) / (k_max - k_min).

    Raises:
        DegenerateRangeError if k_max == k_min.
        DomainError if k is outside of [k_min, k_max].
    """
    if k_max == k_min:
        raise DegenerateRangeError(f'Index range [{k_min}, {k_max}] is empty.')
    if not k_min <= k <= k_max:
        raise DomainError(f'k={k} outside of [{k_min}, {k_max}].')
    return (k - k_min) / (k_max - k_min)


def _fraction(d: DenseDecomposition, k: int) -> float:
    # x of a decomposition whose only index is k_min is 0
    if d.k_max == d.k_min:
        return 0.0
    return normalize_index(k, d.k_min, d.k_max)


def _profile(kind: str, d: DenseDecomposition, counts: Dict[int, int],
             total: int, k0: Optional[int] = None) -> Profile:
    points = tuple(ProfilePoint(_fraction(d, k), cnt / total, k)
                   for k, cnt in sorted(counts.items()) if cnt > 0)
    return Profile(kind, points, k0)


def node_fraction_profile(d: DenseDecomposition, n_total: int) -> Profile:
    """Fraction of nodes in each non-empty k-dense-set.

    Args:
        d:        Decomposition.
        n_total:  Number of nodes of the snapshot.
    """
    if n_total < 1:
        raise DomainError('n_total must be >= 1.')
    return _profile('node_fraction', d, d.set_sizes(), n_total)


def link_fraction_profile(d: DenseDecomposition, m_total: int) -> Profile:
    """Fraction of links in each non-empty k-dense-shell.

    Args:
        d:        Decomposition.
        m_total:  Number of links of the snapshot.
    """
    if m_total < 1:
        raise DomainError('m_total must be >= 1.')
    return _profile('link_fraction', d, d.shell_sizes(), m_total)


def _end_indices(g: Graph, d: DenseDecomposition) -> Tuple[Array, Array]:
    arr = g.edge_array()
    return d.node_index[arr[:, 0]], d.node_index[arr[:, 1]]


def attachment_profile(g: Graph, d: DenseDecomposition) -> Profile:
    """Fraction of links with at least one end in each k-dense-set.

    A link between two sets counts for both, so y values may sum to more
    than one. A link inside a set counts once.
    """
    if g.edge_count == 0:
        raise DomainError('Graph has no links.')
    idx_u, idx_v = _end_indices(g, d)
    counts = {}
    for k in d.set_sizes():
        counts[k] = int(np.count_nonzero((idx_u == k) | (idx_v == k)))
    return _profile('attachment', d, counts, g.edge_count)


def set_to_set_profile(g: Graph, d: DenseDecomposition, k0: int) -> Profile:
    """Distribution of the far ends of links attached to the k0-dense-set.

    Considers the links with at least one end in set k0. y(k) is the
    fraction of those whose other end lies in set k. Links inside set k0
    count for k = k0.

    Raises:
        DomainError if set k0 is empty.
    """
    idx_u, idx_v = _end_indices(g, d)
    attached = (idx_u == k0) | (idx_v == k0)
    total = int(np.count_nonzero(attached))
    if total == 0:
        raise DomainError(f'The {k0}-dense-set is empty.')
    other = np.where(idx_u == k0, idx_v, idx_u)[attached]
    ks, cnts = np.unique(other, return_counts=True)
    return _profile('set_to_set', d, dict(zip(ks.tolist(), cnts.tolist())),
                    total, k0)


def _n_bins(bin_width: float) -> int:
    return max(1, math.ceil(1.0 / bin_width - 1e-9))


def _bin_bounds(idx: int, bin_width: float, n_bins: int) -> Tuple[float, float]:
    lo = idx * bin_width
    hi = 1.0 if idx == n_bins - 1 else (idx + 1) * bin_width
    return lo, hi


def bin_profile(p: Profile, bin_width: float = _defaults.BIN_WIDTH) -> Profile:
    """Bin a profile linearly.

    Bins are [i w, (i+1) w), the last bin is closed at 1. The y value of a
    bin is the sum of its members, its x value the bin midpoint. Empty bins
    are omitted.

    Raises:
        DomainError if ``bin_width`` is not in (0, 1].
    """
    if not 0 < bin_width <= 1:
        raise DomainError(f'bin_width must be in (0, 1], got {bin_width}.')
    n_bins = _n_bins(bin_width)
    sums: Dict[int, List[float]] = {}
    for pnt in p.points:
        idx = min(int(math.floor(pnt.x / bin_width + _EPS)), n_bins - 1)
        sums.setdefault(idx, []).append(pnt.y)
    points = []
    for idx in sorted(sums):
        lo, hi = _bin_bounds(idx, bin_width, n_bins)
        points.append(ProfilePoint((lo + hi) / 2, math.fsum(sums[idx])))
    return Profile(p.kind, tuple(points), p.k0, bin_width)


def aggregate_profiles(ps: Sequence[Profile]) -> AggregatedProfile:
    """Aggregate binned profiles of several snapshots.

    For each bin, mean, nearest-rank 10th and 90th percentiles, minimum,
    and maximum are computed over the snapshots with a point in the bin.

    Raises:
        DomainError if ``ps`` is empty, a profile is not binned, or bin
        widths differ.
    """
    if not ps:
        raise DomainError('Nothing to aggregate.')
    widths = {p.bin_width for p in ps}
    if None in widths:
        raise DomainError('Profiles must be binned before aggregation.')
    if len(widths) != 1:
        raise DomainError(f'Bin widths differ: {sorted(widths)}.')
    bin_width = widths.pop()
    n_bins = _n_bins(bin_width)

    samples: Dict[int, List[float]] = {}
    for p in ps:
        for pnt in p.points:
            idx = min(int(math.floor(pnt.x / bin_width + _EPS)), n_bins - 1)
            samples.setdefault(idx, []).append(pnt.y)

    bins = []
    for idx in range(n_bins):
        lo, hi = _bin_bounds(idx, bin_width, n_bins)
        if idx in samples:
            bnd = tools.band(samples[idx])
            bins.append(AggregatedBin(lo, hi, bnd.mean, bnd.p_low, bnd.p_high,
                                      bnd.min, bnd.max, bnd.n))
        else:
            bins.append(AggregatedBin(lo, hi, None, None, None, None, None, 0))
    return AggregatedProfile(ps[0].name, bin_width, tuple(bins))


def set_summary(g: Graph, d: DenseDecomposition, k: int,
                betweenness: Optional[Array] = None) -> SetSummary:
    """Average degree, clustering, and betweenness of the k-dense-set.

    The node metrics are computed on the full graph ``g``.

    Args:
        g:            Graph.
        d:            Decomposition of ``g``.
        k:            k-dense-index.
        betweenness:  Precomputed betweenness of ``g``.

    Raises:
        DomainError if set k is empty.
    """
    members = np.flatnonzero(d.node_index == k)
    if members.size == 0:
        raise DomainError(f'The {k}-dense-set is empty.')
    if betweenness is None:
        betweenness = structure.betweenness(g)
    deg = g.degrees()
    return SetSummary(
        k, int(members.size),
        tools.fsum_mean(deg[members].tolist()),
        tools.fsum_mean([structure.clustering(g, v) for v in members.tolist()]),
        tools.fsum_mean(betweenness[members].tolist()))


def summary_levels(d: DenseDecomposition) -> List[int]:
    """Return the non-empty sets among 2, 3, and k_max."""
    sizes = d.set_sizes()
    return sorted({k for k in (2, 3, d.k_max) if sizes.get(k, 0) > 0})


def degree_by_index(g: Graph, d: DenseDecomposition) -> pd.DataFrame:
    """Distribution of node degrees in each non-empty k-dense-set.

    Returns:
        Data frame with columns k, x, mean, p10, p90, min, max, n.
    """
    deg = g.degrees()
    rows = []
    for k in d.set_sizes():
        bnd = tools.band(deg[d.node_index == k].tolist())
        rows.append((k, _fraction(d, k), bnd.mean, bnd.p_low, bnd.p_high,
                     bnd.min, bnd.max, bnd.n))
    return pd.DataFrame(rows, columns=['k', 'x', 'mean', 'p10', 'p90', 'min',
                                       'max', 'n'])


def index_by_degree(g: Graph, d: DenseDecomposition,
                    bins_per_decade: int = _defaults.BINS_PER_DECADE
                    ) -> binning.DegreeBinnedSeries:
    """Distribution of k-dense-indices per logarithmic degree range."""
    values = {v: float(d.node_index[v]) for v in g.nodes()}
    return binning.logbin_by_degree(values, g, bins_per_decade)


def core_record(g: Graph, d: Optional[DenseDecomposition] = None) -> CoreRecord:
    """Return k_max, N, M, and density of H_kMAX of ``g``.

    Raises:
        DegenerateCoreError if ``g`` is triangle-free.
    """
    core, k_max = extract_kmax_core(g, d)
    return CoreRecord(k_max, core.node_count, core.edge_count, density(core))


def growth_table(metas: Sequence[SnapshotMeta], k_maxs: Sequence[int],
                 a: float = _defaults.FIT_A,
                 b: float = _defaults.FIT_B) -> pd.DataFrame:
    """Growth of snapshots relative to the first one.

    Args:
        metas:   Snapshot meta data in temporal order.
        k_maxs:  k_max of each snapshot.
        a:       Slope of the average degree fit.
        b:       Offset of the average degree fit.

    Returns:
        Data frame with absolute values, ratios to the first snapshot, and
        the ratio of the fitted average degree. The fit is negative for
        small snapshots (about N < 320 with the default constants), so
        ``fit_ratio`` is NaN if the fit of the first snapshot is not
        positive.
    """
    if not metas or len(metas) != len(k_maxs):
        raise DomainError('Need one k_max per snapshot.')
    rows = []
    for meta, k_max in zip(metas, k_maxs):
        rows.append({'snapshot_id': meta.snapshot_id,
                     'node_count': meta.node_count,
                     'link_count': meta.link_count,
                     'k_max': int(k_max),
                     'avg_degree': average_degree(meta),
                     'fit_avg_degree': average_degree_fit(meta.node_count, a, b)})
    frame = pd.DataFrame(rows)
    first = frame.iloc[0]
    frame['node_ratio'] = frame['node_count'] / first['node_count']
    frame['link_ratio'] = frame['link_count'] / first['link_count']
    frame['k_max_ratio'] = frame['k_max'] / first['k_max']
    frame['avg_degree_ratio'] = frame['avg_degree'] / first['avg_degree']
    if first['fit_avg_degree'] > 0:
        frame['fit_ratio'] = frame['fit_avg_degree'] / first['fit_avg_degree']
    else:
        frame['fit_ratio'] = math.nan
    return frame
