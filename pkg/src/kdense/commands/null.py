"""kdense/commands/null.py -- Significance of k_max against dK-random graphs.

Licensed under the terms of the BSD-3-Clause license.
"""
import logging
import pathlib
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from .. decomposition import k_dense_decomposition
from .. errors import ConfigError, GenerationError, KdenseError
from .. graph import Graph, save_edge_list
from .. io import io as _io
from .. io.reports import ReportWriter
from .. nullmodels import (EnsembleManifest, EnsembleSpec, degree_sequence,
                           iter_ensemble, joint_degree_matrix)
from .. profiles import (Profile, aggregate_profiles, bin_profile,
                         link_fraction_profile)
from . import _common
from . config import RunConfig


logger = logging.getLogger(__name__)

INSTANCE_DIR = 'instances'
MANIFEST = 'manifest.json'


def _preserved(spec: EnsembleSpec, template: Graph, inst: Graph) -> bool:
    if spec.d == 0:
        return (inst.node_count, inst.edge_count) == (template.node_count,
                                                      template.edge_count)
    if spec.d == 1:
        return degree_sequence(inst) == degree_sequence(template)
    return joint_degree_matrix(inst) == joint_degree_matrix(template)


def run(cfg: RunConfig, writer: ReportWriter) -> Dict[str, Any]:
    """Generate a dK ensemble of the input snapshot and decompose every
    instance.

    Instances are written as edge lists next to a manifest that is updated
    after every instance. If generation fails, the manifest lists the
    completed instances and is flagged incomplete.

    Returns:
        Summary with template k_max and ensemble mean and standard
        deviation of k_max.

    Raises:
        ConfigError if ``d`` is not given.
    """
    if cfg.d is None:
        raise ConfigError("Command 'null' requires --d.")
    path = _common.single_input(cfg)
    template, meta = _common.load(cfg, path)
    tmpl_dec = k_dense_decomposition(template)
    tmpl_profile = bin_profile(link_fraction_profile(tmpl_dec,
                                                     template.edge_count),
                               cfg.bin_width)

    spec = EnsembleSpec(cfg.d, cfg.n_instances(), cfg.seed, cfg.swap_factor)
    inst_dir = writer.out_dir.joinpath(INSTANCE_DIR)
    inst_dir.mkdir(exist_ok=True)
    manifest = EnsembleManifest(spec, pathlib.Path(path).name)
    manifest_path = inst_dir.joinpath(MANIFEST)

    rows: List[Dict[str, Any]] = []
    profiles: List[Profile] = []
    try:
        for idx, inst in enumerate(iter_ensemble(spec, template, cfg.workers)):
            out = _io.generate_outpath(path, inst_dir,
                                       f'_{spec.label}_{idx:04d}.txt')
            save_edge_list(inst, out)
            manifest.add(idx, pathlib.Path(INSTANCE_DIR, out.name), inst)
            manifest.save(manifest_path)

            dec = k_dense_decomposition(inst)
            profiles.append(bin_profile(
                link_fraction_profile(dec, inst.edge_count), cfg.bin_width))
            rows.append({'index': idx, 'seed': spec.instance_seed(idx),
                         'node_count': inst.node_count,
                         'link_count': inst.edge_count, 'k_max': dec.k_max,
                         'preserved': _preserved(spec, template, inst)})
            logger.info('%s instance %d: k_max=%d', spec.label, idx, dec.k_max)
    except KdenseError as err:
        manifest.save(manifest_path)
        raise GenerationError(f'{spec.label} ensemble stopped after '
                              f'{len(rows)} instances: {err}') from err

    manifest.complete = True
    manifest.save(manifest_path)

    instances = pd.DataFrame(rows, columns=['index', 'seed', 'node_count',
                                            'link_count', 'k_max', 'preserved'])
    writer.table('instances', instances)

    agg = aggregate_profiles(profiles).to_frame()
    tmpl = tmpl_profile.to_frame().drop(columns='k')
    tmpl.insert(0, 'source', 'template')
    writer.table('link_profiles', agg)
    writer.table('template_link_profile', tmpl)

    k_maxs = instances['k_max'].to_numpy(dtype=float)
    summary = {'model': spec.label,
               'spec': spec.to_dict(),
               'template': meta.snapshot_id,
               'template_k_max': tmpl_dec.k_max,
               'instances': len(rows),
               'k_max_mean': float(np.mean(k_maxs)),
               'k_max_std': float(np.std(k_maxs, ddof=0)),
               'preserved': bool(instances['preserved'].all())}
    if spec.d == 2:
        summary['jdm_preserved'] = summary['preserved']
    writer.document('summary', summary)
    return summary
