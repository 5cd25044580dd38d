"""kdense/nullmodels/ensemble.py -- Seeded dK-random ensembles.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    EnsembleSpec        Parameters of a dK ensemble.
    EnsembleManifest    Record of generated instances.

Functions:
    generate_ensemble   Generate all instances of an ensemble.
    generate_instance   Generate one instance of an ensemble.
    iter_ensemble       Lazily generate the instances of an ensemble.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import logging
import pathlib
from typing import Any, ClassVar, Dict, Iterator, List

import jsonschema

from .. import _defaults
from .. container import Params
from .. errors import DomainError
from .. graph import Graph
from .. io import json as _json
from .. types import PathType, Schema
from . generators import (degree_sequence, generate_0k, generate_1k,
                          generate_2k)


logger = logging.getLogger(__name__)


@dataclass
class EnsembleSpec(Params):
    """Parameter set of a dK ensemble."""
    _schema: ClassVar[Schema] = _json.load_schema('ensemble_spec')
    d: int
    instances: int = _defaults.INSTANCES
    seed: int = 0
    swap_factor: float = _defaults.SWAP_FACTOR

    def __post_init__(self) -> None:
        if self.d not in (0, 1, 2):
            raise DomainError(f'd must be 0, 1, or 2, got {self.d}.')
        if self.instances < 1:
            raise DomainError(f'instances must be >= 1, got {self.instances}.')
        if not self.swap_factor > 0:
            raise DomainError(f'swap_factor must be > 0, got {self.swap_factor}.')
        if self.seed < 0:
            raise DomainError(f'seed must be >= 0, got {self.seed}.')

    def instance_seed(self, idx: int) -> int:
        """Return the seed of instance ``idx``."""
        return self.seed + idx

    @property
    def label(self) -> str:
        """Return the model name, e.g., ``1K``."""
        return f'{self.d}K'


def generate_instance(spec: EnsembleSpec, template: Graph, idx: int) -> Graph:
    """Generate instance ``idx`` of the ensemble.

    Args:
        spec:      Ensemble specification.
        template:  Graph whose dK statistic is preserved.
        idx:       Instance number.

    Returns:
        Random graph.
    """
    seed = spec.instance_seed(idx)
    if spec.d == 0:
        return generate_0k(template.node_count, template.edge_count, seed)
    if spec.d == 1:
        return generate_1k(degree_sequence(template), seed, spec.swap_factor)
    return generate_2k(template, seed, spec.swap_factor)


def _instance_job(args: tuple) -> Graph:
    return generate_instance(*args)


def iter_ensemble(spec: EnsembleSpec, template: Graph,
                  workers: int = 1) -> Iterator[Graph]:
    """Yield the instances of an ensemble in instance order.

    Instances are generated lazily. If generation of an instance fails, all
    previous instances have been yielded before the error propagates.

    Args:
        spec:      Ensemble specification.
        template:  Graph whose dK statistic is preserved.
        workers:   Number of worker processes.

    Yields:
        Random graphs.
    """
    jobs = [(spec, template, idx) for idx in range(spec.instances)]
    logger.info('Generating %d %s-random instances (N=%d, M=%d).',
                spec.instances, spec.label, template.node_count,
                template.edge_count)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(_instance_job, jobs)
    else:
        yield from map(_instance_job, jobs)


def generate_ensemble(spec: EnsembleSpec, template: Graph,
                      workers: int = 1) -> List[Graph]:
    """Generate ``spec.instances`` independent dK-random graphs.

    Instance i uses seed ``spec.seed + i``, hence the result depends on
    ``spec`` and ``template`` only, not on ``workers``.

    Args:
        spec:      Ensemble specification.
        template:  Graph supplying N and M, the degree sequence, or the
                   joint degree matrix.
        workers:   Number of worker processes.

    Returns:
        Random graphs in instance order.
    """
    return list(iter_ensemble(spec, template, workers))


@dataclass
class EnsembleManifest:
    """Record of generated ensemble instances."""
    spec: EnsembleSpec
    template: str
    instances: List[Dict[str, Any]] = field(default_factory=list)
    complete: bool = False

    _validator: ClassVar = jsonschema.Draft7Validator(
        _json.load_schema('ensemble_manifest'))

    def add(self, idx: int, path: PathType, g: Graph) -> None:
        """Register instance ``idx`` written to ``path``."""
        self.instances.append({'index': idx,
                               'seed': self.spec.instance_seed(idx),
                               'path': pathlib.Path(path).as_posix(),
                               'node_count': g.node_count,
                               'link_count': g.edge_count})

    def to_dict(self) -> Dict[str, Any]:
        """Returns the manifest as dictionary."""
        return {'spec': self.spec.to_dict(), 'template': self.template,
                'complete': self.complete, 'instances': list(self.instances)}

    def save(self, path: PathType) -> None:
        """Validate and write the manifest to ``path``."""
        instance = self.to_dict()
        self._validator.validate(instance)
        _json.dump(instance, path)
