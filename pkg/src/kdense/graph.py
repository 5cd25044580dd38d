"""kdense/graph.py -- Graph representation and snapshot ingestion.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    Graph               Immutable undirected simple graph.
    SnapshotMeta        Counts and ingestion diagnostics of a snapshot.

Functions:
    average_degree      2M/N.
    average_degree_fit  Logarithmic fit of the average degree.
    common_neighbors    Intersection of two neighborhoods.
    density             2M/(N(N-1)).
    edge_multiplicities Multiplicity of every edge.
    edge_multiplicity   Number of triangles containing an edge.
    induced_subgraph    Subgraph induced by a set of edges.
    load_edge_list      Parse an edge list with last-seen filtering.
    load_snapshot       Parse an edge list file.
    triangle_count      Number of triangles.
    write_edge_list     Write canonical edge list.
"""
from dataclasses import dataclass
from functools import cached_property
import logging
import math
import pathlib
from typing import (ClassVar, Dict, Iterable, Optional,
                    Sequence, Set, TextIO, Tuple, Union)

import networkx as nx
import numpy as np
from scipy import sparse

from . import _defaults
from . import tools
from . container import Params
from . errors import DomainError, EmptyGraphError, ParseError
from . io import json as _json
from . types import (Array, ByteSource, Edge, EdgeSet, NodeId, NodeSet,
                     PathType, Schema, TokenPair)


logger = logging.getLogger(__name__)


class Graph:
    """Immutable undirected simple graph.

    Nodes are contiguous integer ids ``0 .. node_count-1``. Each node maps
    to an external token, e.g., an AS number. Adjacency is stored in
    compressed sparse row layout with sorted neighbor sequences.
    """
    def __init__(self, labels: Sequence[str], edges: Iterable[Edge]) -> None:
        """Construct a graph from canonical edges.

        Args:
            labels:  Token of each node. Position is the node id.
            edges:   Pairs of node ids.

        Raises:
            DomainError if the edges are not those of a simple graph or the
            labels are not unique.
        """
        self._labels = tuple(str(lbl) for lbl in labels)
        self._ids = {lbl: i for i, lbl in enumerate(self._labels)}
        if len(self._ids) != len(self._labels):
            raise DomainError('Node labels must be unique.')

        n_nodes = len(self._labels)
        canon: Set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise DomainError(f'Self-loop at node {u}.')
            if not (0 <= u < n_nodes and 0 <= v < n_nodes):
                raise DomainError(f'Edge ({u}, {v}) refers to unknown node.')
            canon.add((u, v) if u < v else (v, u))
        self._edges: EdgeSet = frozenset(canon)

        if canon:
            arr = np.array(sorted(canon), dtype=np.int64)
        else:
            arr = np.empty((0, 2), dtype=np.int64)
        self._edge_array = arr
        self._edge_array.setflags(write=False)

        src = np.concatenate((arr[:, 0], arr[:, 1]))
        dst = np.concatenate((arr[:, 1], arr[:, 0]))
        order = np.lexsort((dst, src))
        self._indices = dst[order]
        self._indptr = np.zeros(n_nodes + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n_nodes), out=self._indptr[1:])
        self._indices.setflags(write=False)
        self._indptr.setflags(write=False)

    @classmethod
    def from_edges(cls, pairs: Iterable[TokenPair],
                   nodes: Iterable[str] = ()) -> 'Graph':
        """Construct a graph from token pairs.

        Self-loops are dropped and duplicates collapse. Node ids follow the
        canonical token order.

        Args:
            pairs:  Token pairs.
            nodes:  Additional, possibly isolated, node tokens.

        Returns:
            Graph.
        """
        pairs = [(str(a), str(b)) for a, b in pairs]
        tokens = {str(tok) for tok in nodes}
        for a, b in pairs:
            if a != b:
                tokens.update((a, b))
        labels = tools.sort_tokens(tokens)
        ids = {lbl: i for i, lbl in enumerate(labels)}
        return cls(labels, ((ids[a], ids[b]) for a, b in pairs if a != b))

    @classmethod
    def from_ids(cls, n_nodes: int, edges: Iterable[Edge],
                 labels: Optional[Sequence[str]] = None) -> 'Graph':
        """Construct a graph on nodes ``0 .. n_nodes-1``.

        Args:
            n_nodes:  Number of nodes.
            edges:    Pairs of node ids.
            labels:   Node tokens. Defaults to the decimal node id.

        Returns:
            Graph.
        """
        if labels is None:
            labels = [str(i) for i in range(n_nodes)]
        if len(labels) != n_nodes:
            raise DomainError('Number of labels does not match node count.')
        return cls(labels, edges)

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> 'Graph':
        """Construct a graph from a networkx graph.

        Node names become tokens.
        """
        return cls.from_edges(((str(a), str(b)) for a, b in nxg.edges()),
                              nodes=(str(n) for n in nxg.nodes()))

    @property
    def node_count(self) -> int:
        """Return the number of nodes N."""
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        """Return the number of edges M."""
        return len(self._edges)

    @property
    def edges(self) -> EdgeSet:
        """Return the edge set. Each edge is an (u, v) pair with u < v."""
        return self._edges

    @property
    def labels(self) -> Tuple[str, ...]:
        """Return the node tokens indexed by node id."""
        return self._labels

    def edge_array(self) -> Array:
        """Return edges as read-only (M, 2) array sorted lexicographically."""
        return self._edge_array

    def nodes(self) -> range:
        """Return the node ids."""
        return range(self.node_count)

    def label(self, node: NodeId) -> str:
        """Return the token of ``node``."""
        self._check_node(node)
        return self._labels[node]

    def node_id(self, token: str) -> NodeId:
        """Return the node id of ``token``.

        Raises:
            DomainError if ``token`` is unknown.
        """
        try:
            return self._ids[str(token)]
        except KeyError:
            raise DomainError(f'Unknown node token {token!r}.') from None

    def has_node(self, node: NodeId) -> bool:
        """Return ``True`` if ``node`` is a node id of this graph."""
        return isinstance(node, (int, np.integer)) and 0 <= node < self.node_count

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        """Return ``True`` if (u, v) is an edge."""
        if not (self.has_node(u) and self.has_node(v)):
            return False
        return v in self.neighbor_sets[u]

    def neighbors(self, node: NodeId) -> Array:
        """Return the sorted neighbors of ``node`` as read-only array."""
        self._check_node(node)
        return self._indices[self._indptr[node]:self._indptr[node+1]]

    def degree(self, node: NodeId) -> int:
        """Return the degree of ``node``."""
        self._check_node(node)
        return int(self._indptr[node+1] - self._indptr[node])

    def degrees(self) -> Array:
        """Return the degree of every node, indexed by node id."""
        return np.diff(self._indptr)

    @cached_property
    def neighbor_sets(self) -> Tuple[frozenset, ...]:
        """Neighborhoods as frozensets, for constant-time membership tests."""
        return tuple(frozenset(self.neighbors(v).tolist())
                     for v in self.nodes())

    def adjacency(self) -> sparse.csr_matrix:
        """Return the symmetric 0/1 adjacency matrix in CSR format."""
        data = np.ones(self._indices.size, dtype=np.int8)
        return sparse.csr_matrix((data, self._indices, self._indptr),
                                 shape=(self.node_count, self.node_count))

    def to_networkx(self) -> nx.Graph:
        """Return a networkx copy using node ids as node names."""
        nxg = nx.Graph()
        nxg.add_nodes_from(self.nodes())
        nxg.add_edges_from(self._edge_array.tolist())
        return nxg

    def edge_tokens(self) -> frozenset:
        """Return the edge set in terms of tokens, canonically ordered."""
        return frozenset(_token_pair(self._labels[u], self._labels[v])
                         for u, v in self._edges)

    def _check_node(self, node: NodeId) -> None:
        if not self.has_node(node):
            raise DomainError(f'Unknown node {node!r}.')

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (set(self._labels) == set(other._labels)
                and self.edge_tokens() == other.edge_tokens())

    def __hash__(self) -> int:
        return hash((frozenset(self._labels), self.edge_tokens()))

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        state.pop('neighbor_sets', None)
        return state

    def __repr__(self) -> str:
        return f'Graph(node_count={self.node_count}, edge_count={self.edge_count})'


@dataclass
class SnapshotMeta(Params):
    """Counts and ingestion diagnostics of one snapshot."""
    _schema: ClassVar[Schema] = _json.load_schema('snapshot_meta')
    snapshot_id: str
    node_count: int
    link_count: int
    cutoff: Optional[int] = None
    dropped_self_loops: int = 0
    dropped_duplicates: int = 0
    dropped_by_cutoff: int = 0
    untimed_edges: int = 0


def _token_pair(a: str, b: str) -> TokenPair:
    return (a, b) if tools.token_key(a) <= tools.token_key(b) else (b, a)


def load_edge_list(source: ByteSource, cutoff: Optional[int] = None,
                   snapshot_id: str = 'snapshot') -> Tuple[Graph, SnapshotMeta]:
    """Parse an edge list and apply the last-seen filter.

    Each line holds two node tokens and an optional integer last-seen
    time stamp, separated by white space. Text after ``#`` is ignored.

    If ``cutoff`` is given, edges with a time stamp older than ``cutoff``
    are discarded. Edges without time stamp always pass. Self-loops and
    duplicate edges are dropped and counted in the returned meta data.

    Args:
        source:       Byte stream or iterable of lines.
        cutoff:       Epoch time stamp.
        snapshot_id:  Name of the snapshot.

    Returns:
        Graph and snapshot meta data.

    Raises:
        ParseError, EmptyGraphError
    """
    kept: Set[TokenPair] = set()
    n_loops = n_dups = n_old = n_untimed = 0

    for lineno, line in tools.decoded_lines(source):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) not in (2, 3):
            raise ParseError(f'Expected 2 or 3 fields, found {len(tokens)}.',
                             lineno, line.rstrip('\n'))
        last_seen = None
        if len(tokens) == 3:
            try:
                last_seen = int(tokens[2])
            except ValueError:
                raise ParseError(f'Time stamp {tokens[2]!r} is not an '
                                 'integer.', lineno, line.rstrip('\n')) from None
        a, b = tokens[0], tokens[1]
        if a == b:
            n_loops += 1
            continue
        if cutoff is not None and last_seen is not None and last_seen < cutoff:
            n_old += 1
            continue
        pair = _token_pair(a, b)
        if pair in kept:
            n_dups += 1
            continue
        kept.add(pair)
        if last_seen is None:
            n_untimed += 1

    if not kept:
        raise EmptyGraphError(f'Snapshot {snapshot_id!r} has no usable edge.')

    graph = Graph.from_edges(kept)
    meta = SnapshotMeta(snapshot_id, graph.node_count, graph.edge_count,
                        cutoff, n_loops, n_dups, n_old, n_untimed)
    logger.info('Loaded %s: N=%d, M=%d (dropped %d self-loops, %d duplicates, '
                '%d older than cutoff).', snapshot_id, meta.node_count,
                meta.link_count, n_loops, n_dups, n_old)
    return graph, meta


def load_snapshot(path: PathType, cutoff: Optional[int] = None,
                  snapshot_id: Optional[str] = None
                  ) -> Tuple[Graph, SnapshotMeta]:
    """Parse an edge list file.

    Args:
        path:         Path to edge list.
        cutoff:       Epoch time stamp.
        snapshot_id:  Name of the snapshot. Defaults to the file stem.

    Returns:
        Graph and snapshot meta data.
    """
    path = pathlib.Path(path)
    if snapshot_id is None:
        snapshot_id = path.name.split('.')[0] or path.name
    with path.open('rb') as fobj:
        return load_edge_list(fobj, cutoff, snapshot_id)


def write_edge_list(g: Graph, sink: TextIO) -> None:
    """Write the canonical edge list of ``g``.

    One ``u v`` pair per line, u < v in token order, lines sorted.

    Args:
        g:     Graph.
        sink:  Text stream.
    """
    for a, b in sorted(g.edge_tokens(),
                       key=lambda p: (tools.token_key(p[0]),
                                      tools.token_key(p[1]))):
        sink.write(f'{a} {b}\n')


def save_edge_list(g: Graph, path: PathType) -> None:
    """Write the canonical edge list of ``g`` to ``path``."""
    with pathlib.Path(path).open('w', encoding='utf-8', newline='\n') as fobj:
        write_edge_list(g, fobj)


def common_neighbors(g: Graph, u: NodeId, v: NodeId) -> NodeSet:
    """Return the common neighbors of ``u`` and ``v``.

    The nodes need not be adjacent.

    Raises:
        DomainError if either node is unknown.
    """
    return frozenset(np.intersect1d(g.neighbors(u), g.neighbors(v),
                                    assume_unique=True).tolist())


def edge_multiplicity(g: Graph, u: NodeId, v: NodeId) -> int:
    """Return the multiplicity of edge (u, v).

    The multiplicity is the number of common neighbors of the end points,
    hence the number of triangles containing the edge.

    Raises:
        DomainError if (u, v) is not an edge.
    """
    if not g.has_edge(u, v):
        raise DomainError(f'({u}, {v}) is not an edge.')
    return len(common_neighbors(g, u, v))


def edge_multiplicities(g: Graph) -> Dict[Edge, int]:
    """Return the multiplicity of every edge of ``g``."""
    nbs = g.neighbor_sets
    return {(u, v): len(nbs[u] & nbs[v]) for u, v in g.edge_array().tolist()}


def triangle_count(g: Graph) -> int:
    """Return the number of triangles in ``g``."""
    return sum(edge_multiplicities(g).values()) // 3


def density(g: Graph) -> float:
    """Return the link density D = 2M/(N(N-1)).

    Raises:
        DomainError if N < 2.
    """
    n_nodes = g.node_count
    if n_nodes < 2:
        raise DomainError('Density requires at least two nodes.')
    return 2 * g.edge_count / (n_nodes * (n_nodes - 1))


def average_degree(g: Union[Graph, SnapshotMeta]) -> float:
    """Return the average degree 2M/N of a graph or of snapshot counts.

    Raises:
        DomainError if the graph has no node.
    """
    if g.node_count < 1:
        raise DomainError('Average degree requires at least one node.')
    m = g.edge_count if isinstance(g, Graph) else g.link_count
    return 2 * m / g.node_count


def average_degree_fit(n: float, a: float = _defaults.FIT_A,
                       b: float = _defaults.FIT_B) -> float:
    """Evaluate the logarithmic average degree model a ln(n) - b.

    The result may be negative for small ``n``.

    Args:
        n:  Number of nodes.
        a:  Slope.
        b:  Offset.

    Returns:
        Modelled average degree.
    """
    if n < 2:
        raise DomainError(f'Fit requires n >= 2, got {n}.')
    return a * math.log(n) - b


def induced_subgraph(g: Graph, keep: Iterable[Edge]) -> Graph:
    """Return the subgraph induced by the edges in ``keep``.

    The result contains exactly the edges in ``keep`` and their end points.
    Node ids are renumbered contiguously in the original id order and
    tokens are preserved.

    Raises:
        DomainError if ``keep`` contains a non-edge.
    """
    canon = set()
    for u, v in keep:
        u, v = (u, v) if u < v else (v, u)
        if (u, v) not in g.edges:
            raise DomainError(f'({u}, {v}) is not an edge.')
        canon.add((u, v))
    members = sorted({node for edge in canon for node in edge})
    new_id = {old: new for new, old in enumerate(members)}
    return Graph([g.labels[old] for old in members],
                 ((new_id[u], new_id[v]) for u, v in canon))
