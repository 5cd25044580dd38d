"""kdense/commands/compare.py -- Compare decompositions across snapshots.

Licensed under the terms of the BSD-3-Clause license.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
import logging
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .. decomposition import k_dense_decomposition
from .. errors import DegenerateCoreError
from .. graph import SnapshotMeta, load_snapshot
from .. io.reports import ReportWriter
from .. profiles import (CoreRecord, Profile, aggregate_profiles, bin_profile,
                         core_record, growth_table, set_to_set_profile)
from . import _common
from . config import RunConfig


logger = logging.getLogger(__name__)

# Profile kinds aggregated across snapshots
AGGREGATED = ('node_fraction', 'link_fraction', 'attachment',
              'set_to_set_min', 'set_to_set_3', 'set_to_set_max')


@dataclass(frozen=True)
class SnapshotResult:
    """Per-snapshot outcome reduced by ``run``."""
    meta: SnapshotMeta
    k_max: int
    profiles: Dict[str, Profile]
    core: Optional[CoreRecord]


def analyze_snapshot(path: str, cutoff: Optional[int],
                     bin_width: float) -> SnapshotResult:
    """Decompose one snapshot and bin its profiles.

    Set-to-set profiles are kept for the least dense non-empty set, the
    3-dense-set if it is non-empty, and the k_max-dense-set.
    """
    g, meta = load_snapshot(path, cutoff)
    dec = k_dense_decomposition(g)
    sizes = dec.set_sizes()
    k_lo = min(sizes)
    raw = _common.snapshot_profiles(g, dec)
    profiles = {p.kind: p for p in raw[:3]}
    profiles['set_to_set_min'] = replace(set_to_set_profile(g, dec, k_lo),
                                         kind='set_to_set_min')
    if sizes.get(3, 0) > 0:
        profiles['set_to_set_3'] = replace(set_to_set_profile(g, dec, 3),
                                           kind='set_to_set_3')
    profiles['set_to_set_max'] = replace(set_to_set_profile(g, dec, dec.k_max),
                                         kind='set_to_set_max')
    binned = {kind: bin_profile(p, bin_width) for kind, p in profiles.items()}
    try:
        core = core_record(g, dec)
    except DegenerateCoreError:
        logger.warning('%s is triangle-free; no core record.', meta.snapshot_id)
        core = None
    return SnapshotResult(meta, dec.k_max, binned, core)


def _job(args: Tuple[str, Optional[int], float]) -> SnapshotResult:
    return analyze_snapshot(*args)


def run(cfg: RunConfig, writer: ReportWriter) -> Dict[str, Any]:
    """Compare the decompositions of all input snapshots.

    Writes binned per-snapshot profiles, their aggregation, the growth
    table, and the H_kMAX record of every snapshot.

    Returns:
        Snapshot ids and k_max values in input order.
    """
    jobs = [(path, cfg.cutoff, cfg.bin_width) for path in cfg.inputs]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results: List[SnapshotResult] = list(pool.map(_job, jobs))
    else:
        results = [_job(job) for job in jobs]

    per_snapshot = []
    for res in results:
        per_snapshot.append(_common.profile_frame(
            [res.profiles[kind] for kind in AGGREGATED if kind in res.profiles],
            snapshot_id=res.meta.snapshot_id))
    writer.table('profiles', pd.concat(per_snapshot, ignore_index=True))

    aggregated = []
    for kind in AGGREGATED:
        present = [res.profiles[kind] for res in results if kind in res.profiles]
        if present:
            aggregated.append(aggregate_profiles(present))
    writer.table('profiles_aggregated',
                 pd.concat([agg.to_frame() for agg in aggregated],
                           ignore_index=True))

    writer.table('growth', growth_table([res.meta for res in results],
                                        [res.k_max for res in results]))

    cores = [dict(snapshot_id=res.meta.snapshot_id, **vars(res.core))
             for res in results if res.core is not None]
    writer.table('cores', pd.DataFrame(
        cores, columns=['snapshot_id', 'k_max', 'node_count', 'link_count',
                        'density']))

    writer.document('snapshots', [res.meta.to_dict() for res in results])
    return {'snapshots': [res.meta.snapshot_id for res in results],
            'k_max': [res.k_max for res in results]}
