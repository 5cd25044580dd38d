"""Brute-force reference implementations.

Every function here recomputes a quantity from its definition, without
shortcuts, on small graphs given as (n, edges).
"""
import itertools
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx


Edge = Tuple[int, int]


def canon(edges: Iterable[Edge]) -> Set[Edge]:
    return {(min(u, v), max(u, v)) for u, v in edges}


def neighbors(n: int, edges: Iterable[Edge]) -> List[Set[int]]:
    out: List[Set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        out[u].add(v)
        out[v].add(u)
    return out


def multiplicity(n: int, edges: Set[Edge], edge: Edge) -> int:
    nbs = neighbors(n, edges)
    u, v = edge
    return len(nbs[u] & nbs[v])


def triangles(n: int, edges: Iterable[Edge]) -> int:
    edges = canon(edges)
    return sum(1 for a, b, c in itertools.combinations(range(n), 3)
               if (a, b) in edges and (a, c) in edges and (b, c) in edges)


def k_dense_subgraph(n: int, edges: Iterable[Edge], k: int) -> Set[Edge]:
    """Largest edge set in which every edge lies on >= k-2 triangles."""
    current = canon(edges)
    while True:
        nbs = neighbors(n, current)
        keep = {(u, v) for u, v in current if len(nbs[u] & nbs[v]) >= k - 2}
        if keep == current:
            return current
        current = keep


def k_dense_indices(n: int, edges: Iterable[Edge]
                    ) -> Tuple[Dict[Edge, int], List[int]]:
    """Edge and node k-dense-indices by recomputing H_k for every k."""
    edges = canon(edges)
    edge_index = {e: 2 for e in edges}
    k = 3
    while True:
        h_k = k_dense_subgraph(n, edges, k)
        if not h_k:
            break
        for e in h_k:
            edge_index[e] = k
        k += 1
    node_index = [2] * n
    for (u, v), idx in edge_index.items():
        node_index[u] = max(node_index[u], idx)
        node_index[v] = max(node_index[v], idx)
    return edge_index, node_index


def coreness(n: int, edges: Iterable[Edge]) -> List[int]:
    """Coreness from the definition: largest k with v in the k-core."""
    edges = canon(edges)
    out = [0] * n
    k = 1
    while True:
        alive = set(range(n))
        while True:
            nbs = neighbors(n, [(u, v) for u, v in edges
                                if u in alive and v in alive])
            drop = {v for v in alive if len(nbs[v]) < k}
            if not drop:
                break
            alive -= drop
        if not alive:
            return out
        for v in alive:
            out[v] = k
        k += 1


def transitive_cones(nodes: Iterable[str], p2c: Iterable[Tuple[str, str]]
                     ) -> Dict[str, FrozenSet[str]]:
    """Customer cones from Warshall's transitive closure."""
    nodes = sorted(set(nodes))
    reach = {a: {b: a == b for b in nodes} for a in nodes}
    for a, b in p2c:
        reach[a][b] = True
    for k in nodes:
        for i in nodes:
            if reach[i][k]:
                for j in nodes:
                    if reach[k][j]:
                        reach[i][j] = True
    return {a: frozenset(b for b in nodes if reach[a][b]) for a in nodes}


def betweenness(n: int, edges: Iterable[Edge]) -> List[Fraction]:
    """Betweenness by enumerating all shortest paths of every pair."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    out = [Fraction(0)] * n
    for s, t in itertools.combinations(range(n), 2):
        if not nx.has_path(nxg, s, t):
            continue
        paths = list(nx.all_shortest_paths(nxg, s, t))
        for v in range(n):
            if v in (s, t):
                continue
            through = sum(1 for p in paths if v in p)
            out[v] += Fraction(through, len(paths))
    return out


def path_lengths(n: int, edges: Iterable[Edge]) -> Dict[int, int]:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    hist: Dict[int, int] = {}
    for s, t in itertools.combinations(range(n), 2):
        if nx.has_path(nxg, s, t):
            dist = nx.shortest_path_length(nxg, s, t)
            hist[dist] = hist.get(dist, 0) + 1
    return dict(sorted(hist.items()))


def _paw() -> nx.Graph:
    g = nx.complete_graph(3)
    g.add_edge(2, 3)
    return g


def _diamond() -> nx.Graph:
    g = nx.complete_graph(4)
    g.remove_edge(0, 1)
    return g


MOTIF_TEMPLATES = {
    3: {'path3': nx.path_graph(3), 'triangle': nx.complete_graph(3)},
    4: {'path4': nx.path_graph(4), 'star4': nx.star_graph(3),
        'cycle4': nx.cycle_graph(4), 'paw': _paw(), 'diamond': _diamond(),
        'clique4': nx.complete_graph(4)},
}


def motif_counts(n: int, edges: Iterable[Edge], size: int) -> Dict[str, int]:
    """Induced connected subgraph counts by isomorphism tests."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    counts = dict.fromkeys(MOTIF_TEMPLATES[size], 0)
    for nodes in itertools.combinations(range(n), size):
        sub = nxg.subgraph(nodes)
        if not nx.is_connected(sub):
            continue
        for name, tmpl in MOTIF_TEMPLATES[size].items():
            if nx.is_isomorphic(sub, tmpl):
                counts[name] += 1
                break
    return counts


def realizable_sequences(n: int) -> Set[Tuple[int, ...]]:
    """Degree sequences, sorted non-increasing, of all graphs on n nodes."""
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                deg[u] += 1
                deg[v] += 1
        out.add(tuple(sorted(deg, reverse=True)))
    return out
