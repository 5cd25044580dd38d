"""kdense/metrics/motifs.py -- Motif census and z-scores.

Licensed under the terms of the BSD-3-Clause license.

Motifs are induced connected subgraphs on three or four nodes, grouped by
isomorphism class.

Classes:
    MotifCensus     Counts per isomorphism class.
    ZScore          Deviation of a count from an ensemble.

Functions:
    motif_census    Count induced connected subgraphs.
    motif_zscores   Compare a census against an ensemble of censuses.
"""
from dataclasses import dataclass
import itertools
import logging
import math
from typing import Dict, Iterator, Mapping, Sequence, Tuple

import numpy as np

from .. errors import DomainError
from .. graph import Graph, triangle_count


logger = logging.getLogger(__name__)

MOTIF_CLASSES: Dict[int, Tuple[str, ...]] = {
    3: ('path3', 'triangle'),
    4: ('path4', 'star4', 'cycle4', 'paw', 'diamond', 'clique4'),
}

# Reported next to motif counts
MOTIF_CONVENTION = 'induced'

_CHUNK = 1 << 16


@dataclass(frozen=True)
class MotifCensus:
    """Number of induced connected subgraphs per isomorphism class."""
    size: int
    counts: Mapping[str, int]

    def __getitem__(self, motif: str) -> int:
        return self.counts[motif]


@dataclass(frozen=True)
class ZScore:
    """Deviation of an observed count from an ensemble.

    If the ensemble has zero variance and the observation differs from its
    mean, ``z`` is +/- infinity and ``infinite`` is ``True``.
    """
    x: float
    mu: float
    sigma: float
    z: float

    @property
    def infinite(self) -> bool:
        """Return ``True`` if the deviation is infinite."""
        return math.isinf(self.z)


def _census_3(g: Graph) -> Dict[str, int]:
    n_tri = triangle_count(g)
    deg = g.degrees().astype(np.int64)
    wedges = int((deg * (deg - 1) // 2).sum())
    return {'path3': wedges - 3 * n_tri, 'triangle': n_tri}


def _quadruples(n_nodes: int) -> Iterator[np.ndarray]:
    combos = itertools.combinations(range(n_nodes), 4)
    while True:
        chunk = np.fromiter(itertools.chain.from_iterable(
            itertools.islice(combos, _CHUNK)), dtype=np.int64)
        if chunk.size == 0:
            return
        yield chunk.reshape(-1, 4)


def _census_4(g: Graph) -> Dict[str, int]:
    counts = dict.fromkeys(MOTIF_CLASSES[4], 0)
    adj = g.adjacency().toarray()

    for quad in _quadruples(g.node_count):
        deg = np.zeros((quad.shape[0], 4), dtype=np.int64)
        for i, j in itertools.combinations(range(4), 2):
            bit = adj[quad[:, i], quad[:, j]]
            deg[:, i] += bit
            deg[:, j] += bit
        n_edges = deg.sum(axis=1) // 2
        max_deg = deg.max(axis=1)
        min_deg = deg.min(axis=1)

        three = n_edges == 3
        four = n_edges == 4
        counts['star4'] += int(np.count_nonzero(three & (max_deg == 3)))
        counts['path4'] += int(np.count_nonzero(three & (max_deg == 2)
                                                & (min_deg == 1)))
        counts['cycle4'] += int(np.count_nonzero(four & (max_deg == 2)))
        counts['paw'] += int(np.count_nonzero(four & (max_deg == 3)))
        counts['diamond'] += int(np.count_nonzero(n_edges == 5))
        counts['clique4'] += int(np.count_nonzero(n_edges == 6))
    return counts


def motif_census(g: Graph, size: int) -> MotifCensus:
    """Count induced connected subgraphs of ``size`` nodes.

    Size-3 counts follow from triangle and wedge counts. Size-4 counts
    enumerate all node quadruples and are meant for small graphs such as
    H_kMAX cores.

    Args:
        g:     Graph.
        size:  Either 3 or 4.

    Returns:
        Census.

    Raises:
        DomainError if ``size`` is neither 3 nor 4.
    """
    if size == 3:
        return MotifCensus(3, _census_3(g))
    if size == 4:
        return MotifCensus(4, _census_4(g))
    raise DomainError(f'Motif size must be 3 or 4, got {size}.')


def motif_zscores(target: MotifCensus,
                  ensemble: Sequence[MotifCensus]) -> Dict[str, ZScore]:
    """Compute z = (x - mu) / sigma per motif class.

    ``mu`` and ``sigma`` are the mean and population standard deviation of
    the class counts across ``ensemble``.

    Args:
        target:    Observed census.
        ensemble:  At least two censuses of the same size.

    Returns:
        Z-score per motif class.

    Raises:
        DomainError on too small ensembles or mismatched sizes.
    """
    if len(ensemble) < 2:
        raise DomainError('Z-scores require at least two ensemble members.')
    if any(member.size != target.size for member in ensemble):
        raise DomainError('Motif sizes of target and ensemble differ.')

    out = {}
    for motif in MOTIF_CLASSES[target.size]:
        sample = np.array([member.counts[motif] for member in ensemble],
                          dtype=float)
        x = float(target.counts[motif])
        mu = float(sample.mean())
        sigma = float(sample.std(ddof=0))
        if sigma > 0:
            z = (x - mu) / sigma
        elif x == mu:
            z = 0.0
        else:
            z = math.copysign(math.inf, x - mu)
        out[motif] = ZScore(x, mu, sigma, z)
    return out
