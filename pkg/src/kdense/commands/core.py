"""kdense/commands/core.py -- dK analysis of H_kMAX.

Licensed under the terms of the BSD-3-Clause license.

The densest core of a snapshot is compared with 0K- and 1K-random graphs
of equal size or degree sequence.
"""
import logging
from typing import Any, Callable, Dict, List

import numpy as np
import pandas as pd

from .. import tools
from .. decomposition import extract_kmax_core, k_dense_decomposition
from .. errors import ConfigError
from .. graph import Graph
from .. io.reports import ReportWriter
from .. metrics import (BETWEENNESS_CONVENTION, MOTIF_CLASSES,
                        MOTIF_CONVENTION, as_node_values,
                        average_neighbor_degrees, betweenness, clusterings,
                        motif_census, motif_zscores,
                        per_degree_series, pooled_degree_series,
                        shortest_path_distribution)
from .. nullmodels import EnsembleSpec, degree_sequence, generate_ensemble
from .. profiles import core_record
from . import _common
from . config import RunConfig


logger = logging.getLogger(__name__)

NODE_METRICS: Dict[str, Callable[[Graph], np.ndarray]] = {
    'avg_neighbor_degree': average_neighbor_degrees,
    'clustering': clusterings,
    'betweenness': betweenness,
}

MODELS = (0, 1)


def _degree_series(core: Graph, ensembles: Dict[str, List[Graph]]
                   ) -> pd.DataFrame:
    frames = []
    for metric, func in NODE_METRICS.items():
        frame = per_degree_series(as_node_values(func(core)), core)
        frame.insert(0, 'metric', metric)
        frame.insert(0, 'model', 'original')
        frames.append(frame)
        for model, graphs in ensembles.items():
            frame = pooled_degree_series(
                (as_node_values(func(inst)), inst) for inst in graphs)
            frame.insert(0, 'metric', metric)
            frame.insert(0, 'model', model)
            frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def _path_fractions(g: Graph) -> Dict[int, float]:
    hist = shortest_path_distribution(g)
    total = sum(hist.values())
    return {length: cnt / total for length, cnt in hist.items()} if total else {}


def _path_lengths(core: Graph, ensembles: Dict[str, List[Graph]]
                  ) -> pd.DataFrame:
    columns = ['model', 'length', 'mean', 'p10', 'p90', 'min', 'max', 'n']
    rows = [('original', length, frac, frac, frac, frac, frac, 1)
            for length, frac in _path_fractions(core).items()]
    for model, graphs in ensembles.items():
        fractions = [_path_fractions(inst) for inst in graphs]
        lengths = sorted({length for frac in fractions for length in frac})
        for length in lengths:
            bnd = tools.band([frac.get(length, 0.0) for frac in fractions])
            rows.append((model, length, bnd.mean, bnd.p_low, bnd.p_high,
                         bnd.min, bnd.max, bnd.n))
    return pd.DataFrame(rows, columns=columns)


def _motifs(core: Graph, ensembles: Dict[str, List[Graph]]) -> pd.DataFrame:
    rows = []
    for size in sorted(MOTIF_CLASSES):
        target = motif_census(core, size)
        for model, graphs in ensembles.items():
            zscores = motif_zscores(target,
                                    [motif_census(inst, size) for inst in graphs])
            for motif, zsc in zscores.items():
                rows.append((model, size, motif, zsc.x, zsc.mu, zsc.sigma,
                             zsc.z))
    frame = pd.DataFrame(rows, columns=['model', 'size', 'motif', 'count',
                                        'mu', 'sigma', 'z'])
    frame['convention'] = MOTIF_CONVENTION
    return frame


def run(cfg: RunConfig, writer: ReportWriter) -> Dict[str, Any]:
    """Extract H_kMAX and compare it with its 0K- and 1K-random graphs.

    Returns:
        Core record with the degree sequence check of the 1K ensemble.

    Raises:
        ConfigError if less than two instances are requested.
        DegenerateCoreError if the snapshot is triangle-free.
    """
    if cfg.n_instances() < 2:
        raise ConfigError("Command 'core' requires at least two instances.")
    g, _ = _common.load(cfg, _common.single_input(cfg))
    dec = k_dense_decomposition(g)
    core, _ = extract_kmax_core(g, dec)
    record = core_record(g, dec)
    logger.info('H_kMAX: k_max=%d, N=%d, M=%d, D=%.3f', record.k_max,
                record.node_count, record.link_count, record.density)
    writer.table('core_edges', pd.DataFrame(
        sorted(core.edge_tokens(), key=lambda p: (tools.token_key(p[0]),
                                                  tools.token_key(p[1]))),
        columns=['node_token_u', 'node_token_v']))

    ensembles: Dict[str, List[Graph]] = {}
    for d in MODELS:
        spec = EnsembleSpec(d, cfg.n_instances(), cfg.seed, cfg.swap_factor)
        ensembles[spec.label] = generate_ensemble(spec, core, cfg.workers)

    writer.table('degree_series', _degree_series(core, ensembles))
    writer.table('path_lengths', _path_lengths(core, ensembles))
    writer.table('motifs', _motifs(core, ensembles))

    target_seq = degree_sequence(core)
    summary = dict(vars(record))
    summary['instances'] = cfg.n_instances()
    summary['betweenness_convention'] = BETWEENNESS_CONVENTION
    summary['motif_convention'] = MOTIF_CONVENTION
    summary['degree_sequence_preserved'] = all(
        degree_sequence(inst) == target_seq for inst in ensembles['1K'])
    writer.document('core', summary)
    return summary
