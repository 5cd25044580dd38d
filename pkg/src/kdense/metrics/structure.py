"""kdense/metrics/structure.py -- Node and path statistics.

Licensed under the terms of the BSD-3-Clause license.

Functions:
    average_neighbor_degree     Mean degree of the neighbors of a node.
    betweenness                 Exact shortest-path betweenness.
    clustering                  Local clustering coefficient.
    node_metric_table           Degree, clustering, neighbor degree, and
                                betweenness of every node.
    per_degree_series           Aggregate node values per exact degree.
    pooled_degree_series        Same, pooled over several graphs.
    shortest_path_distribution  Histogram of pairwise distances.
"""
import logging
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import pandas as pd
from scipy.sparse import csgraph

from .. import tools
from .. errors import DomainError
from .. graph import Graph
from .. types import Array, Histogram, NodeId


logger = logging.getLogger(__name__)

# Reported next to betweenness values
BETWEENNESS_CONVENTION = 'unnormalized; endpoints excluded; unordered pairs'


def clustering(g: Graph, v: NodeId) -> float:
    """Return the local clustering coefficient of ``v``.

    The coefficient is the number of triangles at ``v`` divided by
    deg(v)(deg(v)-1)/2. It is 0 for nodes of degree < 2.
    """
    deg = g.degree(v)
    if deg < 2:
        return 0.0
    nbs = g.neighbor_sets
    links = sum(len(nbs[v] & nbs[w]) for w in nbs[v]) // 2
    return 2.0 * links / (deg * (deg - 1))


def clusterings(g: Graph) -> Array:
    """Return the clustering coefficient of every node."""
    return np.array([clustering(g, v) for v in g.nodes()], dtype=float)


def average_neighbor_degree(g: Graph, v: NodeId) -> float:
    """Return the mean degree of the neighbors of ``v``.

    Raises:
        DomainError if ``v`` is isolated.
    """
    nbs = g.neighbors(v)
    if nbs.size == 0:
        raise DomainError(f'Node {v} has no neighbors.')
    return float(g.degrees()[nbs].mean())


def average_neighbor_degrees(g: Graph) -> Array:
    """Return the average neighbor degree of every non-isolated node.

    Isolated nodes are NaN.
    """
    deg = g.degrees()
    out = np.full(g.node_count, np.nan)
    for v in g.nodes():
        if deg[v]:
            out[v] = deg[g.neighbors(v)].mean()
    return out


def betweenness(g: Graph) -> Array:
    """Return the exact betweenness centrality of every node.

    Brandes accumulation over all sources. End points are excluded, values
    are not normalized, and every unordered pair is counted once.
    Disconnected pairs contribute nothing.

    Returns:
        Betweenness indexed by node id.
    """
    scores = nx.betweenness_centrality(g.to_networkx(), normalized=False,
                                       endpoints=False)
    return np.array([scores[v] for v in g.nodes()], dtype=float)


def shortest_path_distribution(g: Graph) -> Histogram:
    """Return the histogram of shortest path lengths.

    Counts every unordered pair of connected, distinct nodes once. Runs a
    BFS from every node and holds the dense N x N distance matrix, so it is
    meant for cores and their random counterparts.

    Returns:
        Mapping of path length to number of pairs, sorted by length.
    """
    dist = csgraph.shortest_path(g.adjacency(), method='D', directed=False,
                                 unweighted=True)
    pairs = dist[np.triu_indices(g.node_count, k=1)]
    lengths, counts = np.unique(pairs[np.isfinite(pairs)].astype(np.int64),
                                return_counts=True)
    return {int(length): int(cnt) for length, cnt in zip(lengths, counts)}


def per_degree_series(values: Mapping[int, float], g: Graph) -> pd.DataFrame:
    """Aggregate node values per exact node degree.

    Args:
        values:  Value per node id. NaN values are ignored.
        g:       Graph supplying the degrees.

    Returns:
        Data frame with columns degree, mean, p10, p90, min, max, n.
    """
    return pooled_degree_series([(values, g)])


def pooled_degree_series(samples: Iterable[Tuple[Mapping[int, float], Graph]]
                         ) -> pd.DataFrame:
    """Aggregate node values of several graphs per exact node degree.

    Nodes of all graphs with equal degree are pooled, e.g., to summarize an
    ensemble of random graphs.

    Args:
        samples:  (values, graph) pairs. NaN values are ignored.

    Returns:
        Data frame with columns degree, mean, p10, p90, min, max, n.
    """
    groups: Dict[int, list] = {}
    for values, g in samples:
        deg = g.degrees()
        for node, val in values.items():
            if not np.isnan(val):
                groups.setdefault(int(deg[node]), []).append(float(val))
    rows = []
    for degree in sorted(groups):
        bnd = tools.band(groups[degree])
        rows.append((degree, bnd.mean, bnd.p_low, bnd.p_high, bnd.min,
                     bnd.max, bnd.n))
    return pd.DataFrame(rows, columns=['degree', 'mean', 'p10', 'p90', 'min',
                                       'max', 'n'])


def as_node_values(arr: Sequence[float]) -> Dict[int, float]:
    """Convert an array indexed by node id into a node value mapping."""
    return {i: float(val) for i, val in enumerate(arr)}


def node_metric_table(g: Graph, btw: Optional[Array] = None) -> pd.DataFrame:
    """Return degree, clustering, average neighbor degree, and betweenness
    of every node, in node id order.

    Args:
        g:    Graph.
        btw:  Precomputed betweenness of ``g``.

    Returns:
        Data frame with columns node_token, degree, clustering,
        avg_neighbor_degree, betweenness.
    """
    if btw is None:
        btw = betweenness(g)
    return pd.DataFrame({'node_token': list(g.labels),
                         'degree': g.degrees(),
                         'clustering': clusterings(g),
                         'avg_neighbor_degree': average_neighbor_degrees(g),
                         'betweenness': btw})
