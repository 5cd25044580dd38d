"""kdense/metrics/binning.py -- Logarithmic degree binning.

Licensed under the terms of the BSD-3-Clause license.
"""
from dataclasses import dataclass
import math
from typing import Dict, List, Mapping, Tuple

import pandas as pd

from .. import _defaults
from .. import tools
from .. errors import DomainError
from .. graph import Graph


@dataclass(frozen=True)
class DegreeBin:
    """Statistics of the node values in one degree range.

    The range [lo, hi] is closed and given in integer degrees.
    """
    lo: int
    hi: int
    mean: float
    p80_low: float
    p80_high: float
    min: float
    max: float
    n: int


@dataclass(frozen=True)
class DegreeBinnedSeries:
    """Node values grouped by logarithmic degree ranges."""
    bins: Tuple[DegreeBin, ...]
    bins_per_decade: int

    def to_frame(self) -> pd.DataFrame:
        """Return the bins as data frame."""
        return pd.DataFrame([vars(b) for b in self.bins],
                            columns=['lo', 'hi', 'mean', 'p80_low',
                                     'p80_high', 'min', 'max', 'n'])


def log_bin_index(degree: int, bins_per_decade: int) -> int:
    """Return the index i of the bin [10^(i/b), 10^((i+1)/b)) holding
    ``degree``. Degree 0 has index -1.
    """
    if degree < 1:
        return -1
    idx = int(math.floor(math.log10(degree) * bins_per_decade))
    while 10 ** ((idx + 1) / bins_per_decade) <= degree:
        idx += 1
    while 10 ** (idx / bins_per_decade) > degree:
        idx -= 1
    return idx


def log_bin_range(idx: int, bins_per_decade: int) -> Tuple[int, int]:
    """Return the closed integer degree range of bin ``idx``."""
    if idx < 0:
        return 0, 0
    lo = math.ceil(10 ** (idx / bins_per_decade))
    hi = math.ceil(10 ** ((idx + 1) / bins_per_decade)) - 1
    while log_bin_index(lo, bins_per_decade) < idx:
        lo += 1
    while log_bin_index(hi + 1, bins_per_decade) == idx:
        hi += 1
    return lo, hi


def logbin_by_degree(values: Mapping[int, float], g: Graph,
                     bins_per_decade: int = _defaults.BINS_PER_DECADE
                     ) -> DegreeBinnedSeries:
    """Group node values by logarithmically binned node degrees.

    Bin i covers degrees in [10^(i/b), 10^((i+1)/b)). Only bins holding at
    least one node are reported. Isolated nodes form a separate bin [0, 0].

    Args:
        values:           Value per node id.
        g:                Graph supplying the degrees.
        bins_per_decade:  Number of bins per factor of ten.

    Returns:
        Binned series ordered by degree.

    Raises:
        DomainError if ``values`` is empty or ``bins_per_decade`` < 1.
    """
    if bins_per_decade < 1:
        raise DomainError(f'bins_per_decade must be >= 1, got {bins_per_decade}.')
    if not values:
        raise DomainError('Cannot bin an empty value map.')

    deg = g.degrees()
    groups: Dict[int, List[float]] = {}
    for node, val in values.items():
        idx = log_bin_index(int(deg[node]), bins_per_decade)
        groups.setdefault(idx, []).append(float(val))

    bins = []
    for idx in sorted(groups):
        bnd = tools.band(groups[idx])
        lo, hi = log_bin_range(idx, bins_per_decade)
        bins.append(DegreeBin(lo, hi, bnd.mean, bnd.p_low, bnd.p_high,
                              bnd.min, bnd.max, bnd.n))
    return DegreeBinnedSeries(tuple(bins), bins_per_decade)
