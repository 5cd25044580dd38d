"""kdense/asdata/relationships.py -- AS business relationships and customer cones.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    CustomerCones       Thread-safe memo of customer cones.
    RelationshipGraph   Provider-to-customer and peering relations.

Functions:
    cone_distribution   Histogram of cone weights.
    cone_weight         Summed weight of a customer cone.
    customer_cone       ASes reachable via provider-to-customer links.
    load_relationships  Parse a relationship file.
    load_weights        Parse a per-AS weight file.
"""
import logging
import pathlib
import threading
from typing import (Collection, Dict, FrozenSet, Iterable, List, Mapping,
                    Optional, Tuple)

import networkx as nx
import pandas as pd

from .. import tools
from .. errors import DomainError, ParseError
from .. types import ByteSource, PathType, TokenPair, TokenSet


logger = logging.getLogger(__name__)

P2C = -1
PEER = 0

Weights = Mapping[str, float]


class RelationshipGraph:
    """Directed provider-to-customer links and undirected peering links.

    A pair of ASes has at most one relation.
    """
    def __init__(self, p2c_edges: Iterable[TokenPair],
                 peer_edges: Iterable[TokenPair] = ()) -> None:
        """
        Args:
            p2c_edges:   (provider, customer) pairs.
            peer_edges:  Unordered peer pairs.

        Raises:
            DomainError on self-relations or pairs with more than one relation.
        """
        self._p2c = frozenset(p2c_edges)
        self._peer = frozenset(_unordered(a, b) for a, b in peer_edges)

        seen: Dict[TokenPair, str] = {}
        for rel, pairs in (('p2c', self._p2c), ('peer', self._peer)):
            for a, b in pairs:
                if a == b:
                    raise DomainError(f'AS {a} is related to itself.')
                key = _unordered(a, b)
                if key in seen:
                    raise DomainError(f'ASes {a} and {b} have more than one '
                                      'relation.')
                seen[key] = rel

        self._digraph = nx.DiGraph()
        self._digraph.add_nodes_from(tools.sort_tokens(
            {tok for pair in seen for tok in pair}))
        self._digraph.add_edges_from(sorted(self._p2c))

    @property
    def p2c_edges(self) -> FrozenSet[TokenPair]:
        """Set of (provider, customer) pairs."""
        return self._p2c

    @property
    def peer_edges(self) -> FrozenSet[TokenPair]:
        """Set of peer pairs in token order."""
        return self._peer

    @property
    def ases(self) -> List[str]:
        """All ASes in canonical token order."""
        return list(self._digraph.nodes)

    def __contains__(self, token: object) -> bool:
        return token in self._digraph

    def __len__(self) -> int:
        return self._digraph.number_of_nodes()

    def customers(self, token: str) -> List[str]:
        """Return the direct customers of ``token``."""
        self._check_as(token)
        return list(self._digraph.successors(token))

    def reachable(self, token: str) -> TokenSet:
        """Return the ASes reachable from ``token`` via p2c links, including
        ``token`` itself.
        """
        self._check_as(token)
        return frozenset(nx.descendants(self._digraph, token) | {token})

    def _check_as(self, token: str) -> None:
        if token not in self._digraph:
            raise DomainError(f'Unknown AS {token!r}.')

    def __repr__(self) -> str:
        return (f'RelationshipGraph(ases={len(self)}, p2c={len(self._p2c)}, '
                f'peer={len(self._peer)})')


def _unordered(a: str, b: str) -> TokenPair:
    return (a, b) if tools.token_key(a) <= tools.token_key(b) else (b, a)


def load_relationships(source: ByteSource) -> RelationshipGraph:
    """Parse a relationship file.

    Each line reads ``A|B|r`` or ``A|B|r|origin``. ``r = -1`` means A is a
    provider of B, ``r = 0`` means A and B are peers. The fourth field is
    ignored. Text after ``#`` is ignored. Repeated relations are collapsed.

    Args:
        source:  Byte stream or iterable of lines.

    Returns:
        Relationship graph.

    Raises:
        ParseError on malformed lines, self-relations, and pairs that appear
        with conflicting relations.
    """
    relations: Dict[TokenPair, Tuple[int, str, str, int]] = {}
    for lineno, line in tools.decoded_lines(source):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        text = line.rstrip('\n')
        fields = [fld.strip() for fld in content.split('|')]
        if len(fields) not in (3, 4):
            raise ParseError(f'Expected 3 or 4 fields, found {len(fields)}.',
                             lineno, text)
        a, b, rel = fields[:3]
        if not a or not b:
            raise ParseError('Empty AS token.', lineno, text)
        if rel not in ('-1', '0'):
            raise ParseError(f'Unknown relation {rel!r}.', lineno, text)
        if a == b:
            raise ParseError(f'AS {a} is related to itself.', lineno, text)

        entry = (int(rel), a, b) if rel == '-1' else (PEER, *_unordered(a, b))
        key = _unordered(a, b)
        if key in relations:
            if relations[key][:3] != entry:
                raise ParseError(f'Conflicting relation for {a}|{b}, first '
                                 f'given in line {relations[key][3]}.',
                                 lineno, text)
            continue
        relations[key] = (*entry, lineno)

    p2c = [(a, b) for rel, a, b, _ in relations.values() if rel == P2C]
    peer = [(a, b) for rel, a, b, _ in relations.values() if rel == PEER]
    graph = RelationshipGraph(p2c, peer)
    logger.info('Loaded relationships: %d ASes, %d p2c, %d peer links.',
                len(graph), len(p2c), len(peer))
    return graph


def load_relationship_file(path: PathType) -> RelationshipGraph:
    """Parse the relationship file at ``path``."""
    with pathlib.Path(path).open('rb') as fobj:
        return load_relationships(fobj)


def customer_cone(r: RelationshipGraph, a: str) -> TokenSet:
    """Return the customer cone of ``a``.

    The cone holds ``a`` and every AS reachable from ``a`` following only
    provider-to-customer links. Peer links are never traversed. Cycles in
    the p2c relation are allowed.

    Raises:
        DomainError if ``a`` is unknown.
    """
    return r.reachable(a)


def cone_weight(r: RelationshipGraph, a: str,
                weights: Optional[Weights] = None) -> float:
    """Return the summed weight of the customer cone of ``a``.

    Without ``weights`` every AS counts 1, which gives the cone size.
    With ``weights``, ASes missing from the mapping count 0.

    Raises:
        DomainError if ``a`` is unknown.
    """
    return _weigh(customer_cone(r, a), weights)


def _weigh(cone: TokenSet, weights: Optional[Weights]) -> float:
    if weights is None:
        return len(cone)
    return sum(weights.get(tok, 0) for tok in tools.sort_tokens(cone))


class CustomerCones:
    """Memo of customer cones over an immutable relationship graph.

    Lookups may be issued from several threads. Results equal those of
    ``customer_cone``.
    """
    def __init__(self, r: RelationshipGraph) -> None:
        self._graph = r
        self._cones: Dict[str, TokenSet] = {}
        self._lock = threading.Lock()

    @property
    def graph(self) -> RelationshipGraph:
        """Underlying relationship graph."""
        return self._graph

    def cone(self, a: str) -> TokenSet:
        """Return the customer cone of ``a``."""
        with self._lock:
            cached = self._cones.get(a)
        if cached is not None:
            return cached
        cone = customer_cone(self._graph, a)
        with self._lock:
            return self._cones.setdefault(a, cone)

    def weight(self, a: str, weights: Optional[Weights] = None) -> float:
        """Return the summed weight of the customer cone of ``a``."""
        return _weigh(self.cone(a), weights)

    def __len__(self) -> int:
        with self._lock:
            return len(self._cones)


def cone_distribution(r: RelationshipGraph,
                      subset: Optional[Collection[str]] = None,
                      weights: Optional[Weights] = None,
                      cones: Optional[CustomerCones] = None
                      ) -> List[Tuple[float, int]]:
    """Histogram of cone weights.

    ASes of ``subset`` without any relation are skipped and reported in the
    log.

    Args:
        r:        Relationship graph.
        subset:   ASes to consider. Defaults to all ASes of ``r``.
        weights:  Per-AS weights. Defaults to AS counts.
        cones:    Optional memo.

    Returns:
        (weight, number of ASes) pairs sorted by weight.
    """
    if cones is None:
        cones = CustomerCones(r)
    members = r.ases if subset is None else tools.sort_tokens(subset)
    hist: Dict[float, int] = {}
    n_missing = 0
    for tok in members:
        if tok not in r:
            n_missing += 1
            continue
        val = cones.weight(tok, weights)
        hist[val] = hist.get(val, 0) + 1
    if n_missing:
        logger.warning('%d ASes have no relationship and were skipped.',
                       n_missing)
    return sorted(hist.items())


def load_weights(path: PathType) -> Dict[str, float]:
    """Parse a CSV file of (as_token, weight) rows.

    A header row ``as_token,weight`` is optional. Lines starting with
    ``#`` are ignored.

    Raises:
        DomainError on malformed or negative weights.
    """
    try:
        frame = pd.read_csv(path, comment='#', header=None,
                            names=['as_token', 'weight'], dtype=str,
                            skipinitialspace=True)
    except pd.errors.ParserError as err:
        raise DomainError(f'Malformed weight file {path}: {err}') from err
    if len(frame) and frame.iloc[0]['as_token'] == 'as_token':
        frame = frame.iloc[1:]
    try:
        values = pd.to_numeric(frame['weight'], errors='raise')
    except (ValueError, TypeError) as err:
        raise DomainError(f'Malformed weight in {path}: {err}') from err
    if values.isna().any() or (values < 0).any():
        raise DomainError(f'Weights in {path} must be non-negative numbers.')
    out = {}
    for tok, val in zip(frame['as_token'].str.strip(), values):
        out[tok] = int(val) if float(val).is_integer() else float(val)
    return out
