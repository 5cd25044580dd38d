"""kdense/decomposition.py -- k-dense and k-core decompositions.

Licensed under the terms of the BSD-3-Clause license.

The k-dense subgraph H_k is the maximal subgraph in which every edge has
multiplicity >= k-2, measured inside H_k. The subgraphs are nested, and an
edge has k-dense-index k if it belongs to H_k but not to H_{k+1}.

Classes:
    CoreDecomposition       Coreness of each node.
    DenseDecomposition      k-dense-index of each edge and node.

Functions:
    extract_kmax_core       H_kMAX as standalone graph.
    k_core_decomposition    Coreness by minimum degree peeling.
    k_dense_decomposition   Edge and node k-dense-indices.
    k_dense_set             Nodes with a given k-dense-index.
    k_dense_shell           Edges with a given k-dense-index.
    k_dense_subgraph        H_k of a graph.
    write_decomposition     CSV output of both decompositions.
"""
from collections import deque
from dataclasses import dataclass
import logging
from typing import Deque, Dict, List, Mapping, Optional, Set, TextIO, Tuple

import networkx as nx
import numpy as np
import pandas as pd

from . import _defaults
from . errors import DegenerateCoreError, DomainError, EmptyGraphError
from . graph import Graph, edge_multiplicities, induced_subgraph
from . types import Array, Edge, EdgeSet, NodeSet


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenseDecomposition:
    """k-dense decomposition of one graph.

    Attributes:
        edge_index:  k-dense-index of each edge (u, v), u < v.
        node_index:  k-dense-index of each node, indexed by node id.
        k_min:       Smallest index of the hierarchy.
        k_max:       Largest edge index.
    """
    edge_index: Mapping[Edge, int]
    node_index: Array
    k_min: int
    k_max: int

    def shell_sizes(self) -> Dict[int, int]:
        """Return the number of edges per k-dense-index."""
        counts: Dict[int, int] = {}
        for idx in self.edge_index.values():
            counts[idx] = counts.get(idx, 0) + 1
        return dict(sorted(counts.items()))

    def set_sizes(self) -> Dict[int, int]:
        """Return the number of nodes per k-dense-index."""
        idx, counts = np.unique(self.node_index, return_counts=True)
        return {int(k): int(c) for k, c in zip(idx, counts)}

    def members(self, k: int) -> EdgeSet:
        """Return the edges of H_k, i.e., edges with index >= k."""
        return frozenset(edge for edge, idx in self.edge_index.items()
                         if idx >= k)

    def subgraph(self, g: Graph, k: int) -> Graph:
        """Return H_k of the decomposed graph ``g``."""
        if k < _defaults.K_MIN:
            raise DomainError(f'k must be >= {_defaults.K_MIN}, got {k}.')
        return induced_subgraph(g, self.members(k))


@dataclass(frozen=True)
class CoreDecomposition:
    """k-core decomposition of one graph.

    Attributes:
        coreness:  Coreness of each node, indexed by node id.
    """
    coreness: Array

    @property
    def max_core(self) -> int:
        """Return the largest coreness."""
        return int(self.coreness.max()) if self.coreness.size else 0


def _prune(nbs: List[Set[int]], mult: Dict[Edge, int], alive: Set[Edge],
           threshold: int) -> List[Edge]:
    """Remove edges with multiplicity below ``threshold`` until fixpoint.

    ``nbs``, ``mult``, and ``alive`` are updated in place. Each removal
    decrements the multiplicity of the two other edges of every triangle
    through the removed edge.

    Returns:
        Removed edges in removal order.
    """
    queue: Deque[Edge] = deque(sorted(e for e in alive if mult[e] < threshold))
    queued = set(queue)
    removed = []
    while queue:
        u, v = queue.popleft()
        alive.discard((u, v))
        removed.append((u, v))
        nbs[u].discard(v)
        nbs[v].discard(u)
        for w in sorted(nbs[u] & nbs[v]):
            for edge in ((u, w) if u < w else (w, u),
                         (v, w) if v < w else (w, v)):
                mult[edge] -= 1
                if mult[edge] < threshold and edge not in queued:
                    queued.add(edge)
                    queue.append(edge)
    return removed


def _working_copy(g: Graph) -> Tuple[List[Set[int]], Dict[Edge, int], Set[Edge]]:
    nbs = [set(nb) for nb in g.neighbor_sets]
    mult = edge_multiplicities(g)
    return nbs, mult, set(mult)


def k_dense_subgraph(g: Graph, k: int) -> Graph:
    """Compute the k-dense subgraph H_k of ``g``.

    Edges with in-subgraph multiplicity below k-2 are pruned iteratively
    until no such edge is left. Nodes without remaining edges are dropped.

    Args:
        g:  Graph.
        k:  Density level, k >= 2.

    Returns:
        H_k as standalone graph.

    Raises:
        DomainError if k < 2.
    """
    if k < _defaults.K_MIN:
        raise DomainError(f'k must be >= {_defaults.K_MIN}, got {k}.')
    nbs, mult, alive = _working_copy(g)
    _prune(nbs, mult, alive, k - 2)
    return induced_subgraph(g, alive)


def k_dense_decomposition(g: Graph) -> DenseDecomposition:
    """Compute the k-dense-index of every edge and node of ``g``.

    H_{k+1} is derived from H_k by pruning edges whose multiplicity inside
    H_k is below k-1. Edges removed in this step have index k. A node's
    index is the maximum index of its edges; isolated nodes get index 2.

    Args:
        g:  Graph with at least one edge.

    Returns:
        Decomposition.

    Raises:
        EmptyGraphError if ``g`` has no edge.
    """
    if g.edge_count == 0:
        raise EmptyGraphError('Cannot decompose a graph without edges.')

    nbs, mult, alive = _working_copy(g)
    edge_index: Dict[Edge, int] = {}
    k = _defaults.K_MIN
    while alive:
        removed = _prune(nbs, mult, alive, k - 1)
        for edge in removed:
            edge_index[edge] = k
        logger.debug('H_%d: %d edges, %d remain in H_%d.', k,
                     len(removed) + len(alive), len(alive), k + 1)
        k += 1

    node_index = np.full(g.node_count, _defaults.K_MIN, dtype=np.int64)
    arr = g.edge_array()
    idx = np.array([edge_index[(u, v)] for u, v in arr.tolist()],
                   dtype=np.int64)
    np.maximum.at(node_index, arr[:, 0], idx)
    np.maximum.at(node_index, arr[:, 1], idx)

    k_max = int(idx.max())
    logger.info('k-dense decomposition: k_max=%d.', k_max)
    return DenseDecomposition(dict(sorted(edge_index.items())), node_index,
                              _defaults.K_MIN, k_max)


def _check_range(d: DenseDecomposition, k: int) -> None:
    if not d.k_min <= k <= d.k_max:
        raise DomainError(f'k={k} outside of [{d.k_min}, {d.k_max}].')


def k_dense_shell(d: DenseDecomposition, k: int) -> EdgeSet:
    """Return the k-dense-shell, the edges with index ``k``.

    Raises:
        DomainError if k is outside of [k_min, k_max].
    """
    _check_range(d, k)
    return frozenset(edge for edge, idx in d.edge_index.items() if idx == k)


def k_dense_set(d: DenseDecomposition, k: int) -> NodeSet:
    """Return the k-dense-set, the nodes with index ``k``.

    Raises:
        DomainError if k is outside of [k_min, k_max].
    """
    _check_range(d, k)
    return frozenset(np.flatnonzero(d.node_index == k).tolist())


def k_core_decomposition(g: Graph) -> CoreDecomposition:
    """Compute the coreness of every node by minimum degree peeling.

    Args:
        g:  Graph.

    Returns:
        Core decomposition.
    """
    cores = nx.core_number(g.to_networkx())
    return CoreDecomposition(np.array([cores[v] for v in g.nodes()],
                                      dtype=np.int64))


def extract_kmax_core(g: Graph,
                      d: Optional[DenseDecomposition] = None
                      ) -> Tuple[Graph, int]:
    """Extract H_kMAX as standalone graph.

    Degrees of the returned graph are measured within H_kMAX. The core
    need not be connected.

    Args:
        g:  Graph.
        d:  Decomposition of ``g``. Computed if not given.

    Returns:
        H_kMAX and k_max.

    Raises:
        DegenerateCoreError if ``g`` has no triangle.
    """
    if d is None:
        d = k_dense_decomposition(g)
    if d.k_max <= _defaults.K_MIN:
        raise DegenerateCoreError('Graph is triangle-free; H_kMAX equals '
                                  'the whole graph.')
    return induced_subgraph(g, k_dense_shell(d, d.k_max)), d.k_max


def decomposition_frames(g: Graph, d: DenseDecomposition,
                         core: CoreDecomposition
                         ) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """Tabulate both decompositions.

    Returns:
        Node table (node_token, k_dense_index, coreness) and edge table
        (node_token_u, node_token_v, k_dense_index).
    """
    nodes = pd.DataFrame({'node_token': list(g.labels),
                          'k_dense_index': d.node_index,
                          'coreness': core.coreness})
    edges = pd.DataFrame(
        [(g.labels[u], g.labels[v], idx) for (u, v), idx in d.edge_index.items()],
        columns=['node_token_u', 'node_token_v', 'k_dense_index'])
    return nodes, edges


def write_decomposition(g: Graph, d: DenseDecomposition,
                        core: CoreDecomposition, node_sink: TextIO,
                        edge_sink: TextIO) -> None:
    """Write both decompositions as CSV.

    Args:
        g:          Decomposed graph.
        d:          k-dense decomposition of ``g``.
        core:       k-core decomposition of ``g``.
        node_sink:  Text stream for the node table.
        edge_sink:  Text stream for the edge table.
    """
    nodes, edges = decomposition_frames(g, d, core)
    nodes.to_csv(node_sink, index=False, lineterminator='\n')
    edges.to_csv(edge_sink, index=False, lineterminator='\n')
