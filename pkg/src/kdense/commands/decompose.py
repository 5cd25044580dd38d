"""kdense/commands/decompose.py -- Decompose one snapshot.

Licensed under the terms of the BSD-3-Clause license.
"""
import logging
from typing import Any, Dict

import pandas as pd

from .. decomposition import (decomposition_frames, k_core_decomposition,
                              k_dense_decomposition)
from .. io.reports import ReportWriter
from .. metrics import BETWEENNESS_CONVENTION, betweenness, node_metric_table
from .. profiles import (bin_profile, degree_by_index, index_by_degree,
                         set_summary, summary_levels)
from . import _common
from . config import RunConfig


logger = logging.getLogger(__name__)


def run(cfg: RunConfig, writer: ReportWriter) -> Dict[str, Any]:
    """Decompose one snapshot and write decomposition, profile, and
    summary reports.

    Returns:
        Snapshot meta data with N, M, k_max, and maximum coreness.
    """
    g, meta = _common.load(cfg, _common.single_input(cfg))
    dec = k_dense_decomposition(g)
    core = k_core_decomposition(g)

    nodes, edges = decomposition_frames(g, dec, core)
    writer.table('nodes', nodes)
    writer.table('edges', edges)

    profiles = _common.snapshot_profiles(g, dec)
    writer.table('profiles', _common.profile_frame(profiles))
    writer.table('profiles_binned', _common.profile_frame(
        bin_profile(p, cfg.bin_width) for p in profiles))

    logger.info('Computing betweenness of %d nodes.', g.node_count)
    btw = betweenness(g)
    writer.table('node_metrics', node_metric_table(g, btw))
    summaries = [set_summary(g, dec, k, btw) for k in summary_levels(dec)]
    frame = pd.DataFrame([vars(s) for s in summaries],
                         columns=['k', 'n', 'mean_degree', 'mean_clustering',
                                  'mean_betweenness'])
    frame['betweenness_convention'] = BETWEENNESS_CONVENTION
    writer.table('set_summaries', frame)

    writer.table('degree_by_index', degree_by_index(g, dec))
    writer.table('index_by_degree', index_by_degree(g, dec).to_frame())

    record = meta.to_dict()
    record.update(k_min=dec.k_min, k_max=dec.k_max, max_core=core.max_core)
    writer.document('meta', record)
    logger.info('%s: N=%d, M=%d, k_max=%d', meta.snapshot_id,
                meta.node_count, meta.link_count, dec.k_max)
    return record
