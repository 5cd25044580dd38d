"""kdense/commands/_common.py -- Helpers shared by commands.

Licensed under the terms of the BSD-3-Clause license.
"""
import logging
from typing import Iterable, List, Tuple

import pandas as pd

from .. decomposition import DenseDecomposition
from .. errors import ConfigError
from .. graph import Graph, SnapshotMeta, load_snapshot
from .. profiles import (Profile, attachment_profile, link_fraction_profile,
                         node_fraction_profile, set_to_set_profile)
from . config import RunConfig


logger = logging.getLogger(__name__)


def single_input(cfg: RunConfig) -> str:
    """Return the only input path of ``cfg``.

    Raises:
        ConfigError if not exactly one input is given.
    """
    if len(cfg.inputs) != 1:
        raise ConfigError(f'Command {cfg.command!r} expects exactly one '
                          f'input, got {len(cfg.inputs)}.')
    return cfg.inputs[0]


def load(cfg: RunConfig, path: str) -> Tuple[Graph, SnapshotMeta]:
    """Load snapshot ``path`` with the cutoff of ``cfg``."""
    logger.info('Loading %s', path)
    return load_snapshot(path, cfg.cutoff)


def snapshot_profiles(g: Graph, d: DenseDecomposition) -> List[Profile]:
    """Node, link, attachment, and all set-to-set profiles of a snapshot."""
    out = [node_fraction_profile(d, g.node_count),
           link_fraction_profile(d, g.edge_count),
           attachment_profile(g, d)]
    out.extend(set_to_set_profile(g, d, k0) for k0 in d.set_sizes())
    return out


def profile_frame(profiles: Iterable[Profile], **columns: object) -> pd.DataFrame:
    """Stack profiles into one data frame.

    Keyword arguments are prepended as constant columns.
    """
    frames = [p.to_frame() for p in profiles]
    frame = (pd.concat(frames, ignore_index=True) if frames
             else pd.DataFrame(columns=['kind', 'k', 'x', 'y']))
    for pos, (name, val) in enumerate(columns.items()):
        frame.insert(pos, name, val)
    return frame
