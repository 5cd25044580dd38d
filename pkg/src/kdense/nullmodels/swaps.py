"""kdense/nullmodels/swaps.py -- Double edge swap randomization.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    SwapEngine      Degree- or joint-degree-preserving edge rewiring.
"""
import logging
import math
from typing import List, Optional, Sequence, Set

import numpy as np

from .. import _defaults
from .. errors import DomainError, GenerationError
from .. types import Edge, Seed


logger = logging.getLogger(__name__)

PRESERVE_MODES = ('degree', 'joint_degree')


class SwapEngine:
    """Rewire a simple graph by double edge swaps.

    A proposal picks two distinct edges (a, b), (c, d) uniformly at random
    and replaces them by (a, d), (c, b). Proposals that would create a
    self-loop or a parallel edge are rejected. Every accepted swap preserves
    the degree sequence. In ``joint_degree`` mode a swap is admissible only if
    deg(b) = deg(d) or deg(a) = deg(c), which additionally preserves the
    joint degree matrix.
    """
    def __init__(self, n_nodes: int, edges: Sequence[Edge],
                 preserve: str = 'degree', seed: Seed = None,
                 validate: bool = False) -> None:
        """
        Args:
            n_nodes:   Number of nodes.
            edges:     Edges of a simple graph.
            preserve:  Either ``degree`` or ``joint_degree``.
            seed:      Seed or numpy random generator.
            validate:  Check simplicity after every accepted swap.
        """
        if preserve not in PRESERVE_MODES:
            raise DomainError(f'Unknown preservation mode {preserve!r}. '
                              f'Use one of {PRESERVE_MODES}.')
        self.preserve = preserve
        self.validate = validate
        self.rng = np.random.default_rng(seed)
        self._edges: List[Edge] = [(u, v) if u < v else (v, u)
                                   for u, v in edges]
        self._adj: List[Set[int]] = [set() for _ in range(n_nodes)]
        for u, v in self._edges:
            self._adj[u].add(v)
            self._adj[v].add(u)
        self._deg = [len(nb) for nb in self._adj]
        self.accepted = 0
        self.proposed = 0

    @property
    def edges(self) -> List[Edge]:
        """Return the current edges, sorted."""
        return sorted(self._edges)

    @property
    def edge_count(self) -> int:
        """Return the number of edges."""
        return len(self._edges)

    def run(self, n_swaps: int, max_proposals: Optional[int] = None) -> int:
        """Perform ``n_swaps`` accepted swaps.

        Stops early if ``max_proposals`` proposals are used up, which
        happens on rigid graphs such as complete graphs.

        Args:
            n_swaps:        Number of accepted swaps to perform.
            max_proposals:  Proposal budget. Defaults to 100 * n_swaps.

        Returns:
            Number of accepted swaps.
        """
        if max_proposals is None:
            max_proposals = _defaults.PROPOSAL_FACTOR * n_swaps
        n_edges = len(self._edges)
        if n_edges < 2 or n_swaps <= 0:
            return 0

        accepted = proposed = 0
        while accepted < n_swaps and proposed < max_proposals:
            size = min(_defaults.SWAP_BATCH, max_proposals - proposed)
            picks = self.rng.integers(0, n_edges, size=(size, 2))
            flips = self.rng.random(size) < 0.5
            for (i, j), flip in zip(picks.tolist(), flips.tolist()):
                proposed += 1
                if self._propose(i, j, flip):
                    accepted += 1
                    if accepted >= n_swaps:
                        break

        self.accepted += accepted
        self.proposed += proposed
        if accepted < n_swaps:
            logger.warning('Proposal budget exhausted after %d of %d swaps.',
                           accepted, n_swaps)
        else:
            logger.debug('%d swaps accepted out of %d proposals.', accepted,
                         proposed)
        return accepted

    def _propose(self, i: int, j: int, flip: bool) -> bool:
        if i == j:
            return False
        a, b = self._edges[i]
        c, d = self._edges[j]
        if flip:
            c, d = d, c
        if a == d or c == b:
            return False
        if self.preserve == 'joint_degree':
            deg = self._deg
            if deg[b] != deg[d] and deg[a] != deg[c]:
                return False
        adj = self._adj
        if d in adj[a] or b in adj[c]:
            return False

        adj[a].discard(b)
        adj[b].discard(a)
        adj[c].discard(d)
        adj[d].discard(c)
        adj[a].add(d)
        adj[d].add(a)
        adj[c].add(b)
        adj[b].add(c)
        self._edges[i] = (a, d) if a < d else (d, a)
        self._edges[j] = (c, b) if c < b else (b, c)
        if self.validate:
            self._check_simple()
        return True

    def _check_simple(self) -> None:
        seen = set(self._edges)
        if len(seen) != len(self._edges):
            raise GenerationError('Swap created a parallel edge.')
        if any(u == v for u, v in self._edges):
            raise GenerationError('Swap created a self-loop.')
        if [len(nb) for nb in self._adj] != self._deg:
            raise GenerationError('Swap changed the degree sequence.')


def swap_count(n_edges: int, swap_factor: float) -> int:
    """Return the number of swaps ceil(swap_factor * M)."""
    if swap_factor <= 0:
        raise DomainError(f'swap_factor must be > 0, got {swap_factor}.')
    return int(math.ceil(swap_factor * n_edges))
