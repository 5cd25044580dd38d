"""kdense/nullmodels/generators.py -- dK-random graph generators.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    DegreeSequence      Non-increasing degree sequence (1K statistic).
    JointDegreeMatrix   Edge counts between degree classes (2K statistic).

Functions:
    degree_sequence     Degree sequence of a graph.
    generate_0k         Uniform random graph with N nodes and M edges.
    generate_1k         Random graph with a given degree sequence.
    generate_2k         Random graph with a given joint degree matrix.
    is_graphical        Erdős–Gallai test.
    joint_degree_matrix Joint degree matrix of a graph.
"""
from collections import Counter
from dataclasses import dataclass, field
import logging
from typing import Dict, Mapping, Set, Tuple

import networkx as nx
import numpy as np

from .. import _defaults
from .. errors import DomainError
from .. graph import Graph
from .. types import Edge, Seed
from . swaps import SwapEngine, swap_count


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing sequence of non-negative node degrees."""
    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(int(deg) for deg in self.degrees)
        if any(deg < 0 for deg in degs):
            raise DomainError('Degrees must be non-negative.')
        object.__setattr__(self, 'degrees', tuple(sorted(degs, reverse=True)))

    @property
    def node_count(self) -> int:
        """Return N."""
        return len(self.degrees)

    @property
    def edge_count(self) -> int:
        """Return M, assuming the sequence is graphical."""
        return sum(self.degrees) // 2

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class JointDegreeMatrix:
    """Number of edges between degree classes.

    Keys are degree pairs (d1, d2) with d1 <= d2.
    """
    entries: Mapping[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def edge_count(self) -> int:
        """Return M."""
        return sum(self.entries.values())

    def node_counts(self) -> Dict[int, int]:
        """Return the number of nodes per degree class.

        Each node of degree d contributes d edge ends to class d.
        """
        ends: Counter = Counter()
        for (d1, d2), count in self.entries.items():
            ends[d1] += count
            ends[d2] += count
        return {deg: ends[deg] // deg for deg in sorted(ends) if deg > 0}


def degree_sequence(g: Graph) -> DegreeSequence:
    """Return the degree sequence of ``g``."""
    return DegreeSequence(tuple(g.degrees().tolist()))


def is_graphical(s: DegreeSequence) -> bool:
    """Return ``True`` if ``s`` is realizable by a simple graph.

    Uses the Erdős–Gallai conditions.
    """
    return bool(nx.is_graphical(list(s.degrees), method='eg'))


def _unrank_pairs(ranks: np.ndarray, n: int) -> np.ndarray:
    # ranks index the row-major upper triangle of an n x n matrix
    ranks = np.asarray(ranks, dtype=np.int64)
    rad = np.sqrt((4 * n * (n - 1) - 7 - 8 * ranks).astype(np.float64))
    rows = n - 2 - np.floor(rad / 2.0 - 0.5).astype(np.int64)
    cols = (ranks + rows + 1 - n * (n - 1) // 2
            + (n - rows) * ((n - rows) - 1) // 2)
    return np.stack((rows, cols), axis=1)


def _sample_pairs(n: int, m: int, rng: np.random.Generator) -> Set[Edge]:
    total = n * (n - 1) // 2
    ranks = rng.choice(total, size=m, replace=False)
    return set(map(tuple, _unrank_pairs(ranks, n).tolist()))


def generate_0k(n: int, m: int, seed: Seed = None) -> Graph:
    """Draw a uniform random simple graph with ``n`` nodes and ``m`` edges.

    The ``m`` edges are thrown onto the n(n-1)/2 node pairs uniformly at
    random without replacement.

    Args:
        n:     Number of nodes.
        m:     Number of edges.
        seed:  Seed or numpy random generator.

    Returns:
        Graph on nodes ``0 .. n-1``.

    Raises:
        DomainError if ``m`` exceeds n(n-1)/2.
    """
    total = n * (n - 1) // 2
    if n < 0 or m < 0:
        raise DomainError('n and m must be non-negative.')
    if m > total:
        raise DomainError(f'{m} edges do not fit onto {n} nodes.')
    rng = np.random.default_rng(seed)
    edges = _sample_pairs(n, m, rng) if m else set()
    return Graph.from_ids(n, edges)


def generate_1k(s: DegreeSequence, seed: Seed = None,
                swap_factor: float = _defaults.SWAP_FACTOR) -> Graph:
    """Draw a random graph with degree sequence ``s``.

    A deterministic Havel–Hakimi realization is randomized by
    ceil(swap_factor * M) accepted degree-preserving double edge swaps.
    Node i has degree ``s.degrees[i]``.

    Args:
        s:            Graphical degree sequence.
        seed:         Seed or numpy random generator.
        swap_factor:  Swaps per edge.

    Returns:
        Graph on nodes ``0 .. N-1``.

    Raises:
        DomainError if ``s`` is not graphical.
    """
    if not is_graphical(s):
        raise DomainError('Degree sequence is not graphical.')
    n_swaps = swap_count(s.edge_count, swap_factor)
    base = nx.havel_hakimi_graph(list(s.degrees))
    engine = SwapEngine(s.node_count, list(base.edges()), 'degree', seed)
    engine.run(n_swaps, _defaults.PROPOSAL_FACTOR * n_swaps)
    return Graph.from_ids(s.node_count, engine.edges)


def joint_degree_matrix(g: Graph) -> JointDegreeMatrix:
    """Return the joint degree matrix of ``g``.

    Entry (d1, d2) counts the edges whose end points have degrees d1 and
    d2 in ``g``.
    """
    deg = g.degrees()
    arr = g.edge_array()
    ends = np.sort(np.stack((deg[arr[:, 0]], deg[arr[:, 1]]), axis=1), axis=1)
    counts = Counter(map(tuple, ends.tolist()))
    return JointDegreeMatrix(dict(sorted(counts.items())))


def generate_2k(g: Graph, seed: Seed = None,
                swap_factor: float = _defaults.SWAP_FACTOR) -> Graph:
    """Draw a random graph with the joint degree matrix of ``g``.

    Starts from a copy of ``g`` and applies ceil(swap_factor * M) accepted
    joint-degree-preserving double edge swaps. Node ids and tokens are
    those of ``g``.

    Args:
        g:            Template graph with at least two edges.
        seed:         Seed or numpy random generator.
        swap_factor:  Swaps per edge.

    Returns:
        Rewired graph.

    Raises:
        DomainError if ``g`` has less than two edges.
    """
    if g.edge_count < 2:
        raise DomainError('2K rewiring requires at least two edges.')
    n_swaps = swap_count(g.edge_count, swap_factor)
    engine = SwapEngine(g.node_count, g.edge_array().tolist(),
                        'joint_degree', seed)
    engine.run(n_swaps, _defaults.PROPOSAL_FACTOR * n_swaps)
    return Graph(g.labels, engine.edges)
