"""kdense/commands/cone.py -- Customer cones and rank overlaps of the
densest set.

Licensed under the terms of the BSD-3-Clause license.
"""
import logging
from typing import Any, Dict, List, Optional

import pandas as pd

from .. asdata import (CustomerCones, RankedList, cone_distribution,
                       load_ranks, load_relationship_file, load_weights,
                       rank_overlap, top_n_by_metric)
from .. decomposition import k_dense_decomposition, k_dense_set
from .. errors import ConfigError
from .. io.reports import ReportWriter
from . import _common
from . config import RunConfig


logger = logging.getLogger(__name__)


def _cone_frame(hist: List, unit: str) -> pd.DataFrame:
    frame = pd.DataFrame(hist, columns=['cone', 'count'])
    frame.insert(0, 'unit', unit)
    return frame


def run(cfg: RunConfig, writer: ReportWriter) -> Dict[str, Any]:
    """Compute customer cone distributions for all ASes and for the
    k_max-dense-set, and overlaps of the set with rankings.

    Cones count ASes unless a weight file is given, in which case they sum
    the weights. The ``unit`` column names which one is reported.

    Rankings are the node degree of the snapshot and every rank file. Each
    is compared at its first ``top_n`` entries, by default the size of the
    k_max-dense-set.

    Returns:
        Set size and overlap per ranking.

    Raises:
        ConfigError if no relationship file is given.
    """
    if cfg.relationships is None:
        raise ConfigError("Command 'cone' requires --relationships.")
    g, _ = _common.load(cfg, _common.single_input(cfg))
    dec = k_dense_decomposition(g)
    dense = [g.label(v) for v in sorted(k_dense_set(dec, dec.k_max))]
    logger.info('k_max=%d, the densest set has %d ASes.', dec.k_max, len(dense))

    rels = load_relationship_file(cfg.relationships)
    weights: Optional[Dict[str, float]] = None
    unit = 'ases'
    if cfg.weights is not None:
        weights = load_weights(cfg.weights)
        unit = 'weight'
    cones = CustomerCones(rels)

    writer.table('cones_all', _cone_frame(
        cone_distribution(rels, None, weights, cones), unit))
    writer.table('cones_kmax', _cone_frame(
        cone_distribution(rels, dense, weights, cones), unit))

    deg = g.degrees()
    members = pd.DataFrame(
        [(tok, int(deg[g.node_id(tok)]),
          cones.weight(tok, weights) if tok in rels else None)
         for tok in dense],
        columns=['as_token', 'degree', 'cone'])
    if weights is None:
        members['cone'] = members['cone'].astype('Int64')
    members.insert(2, 'unit', unit)
    writer.table('kmax_members', members)

    top_n = cfg.top_n if cfg.top_n is not None else len(dense)
    degrees = {g.label(v): float(deg[v]) for v in g.nodes()}
    rankings: List[RankedList] = [top_n_by_metric(degrees, top_n, 'degree')]
    rankings.extend(load_ranks(path) for path in cfg.ranks)
    rows = [(rk.metric_name, top_n, len(dense), rank_overlap(dense, rk, top_n))
            for rk in rankings]
    overlaps = pd.DataFrame(rows, columns=['metric', 'top_n', 'set_size',
                                           'overlap'])
    writer.table('rank_overlap', overlaps)
    return {'k_max': dec.k_max, 'set_size': len(dense),
            'overlap': dict(zip(overlaps['metric'], overlaps['overlap']))}
