"""kdense/commands/config.py -- Run configuration.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    RunConfig       Validated parameters of one command run.

Functions:
    merge_config    Combine defaults, config file, and flags.
"""
from dataclasses import dataclass, field
import pathlib
from typing import Any, ClassVar, Dict, List, Mapping, Optional

from .. import _defaults
from .. import tools
from .. container import Params
from .. errors import ConfigError
from .. io import json as _json
from .. types import Schema


COMMANDS = ('decompose', 'compare', 'null', 'core', 'cone')

# Keys that do not influence report content
_UNHASHED = ('out', 'workers')


@dataclass
class RunConfig(Params):
    """Parameters of one command run."""
    _schema: ClassVar[Schema] = _json.load_schema('run_config')

    command: str
    inputs: List[str]
    cutoff: Optional[int] = None
    bin_width: float = _defaults.BIN_WIDTH
    d: Optional[int] = None
    instances: Optional[int] = None
    seed: int = 0
    swap_factor: float = _defaults.SWAP_FACTOR
    out: str = 'kdense_out'
    format: str = 'csv'
    relationships: Optional[str] = None
    weights: Optional[str] = None
    ranks: List[str] = field(default_factory=list)
    top_n: Optional[int] = None
    workers: int = 1

    def validate(self) -> None:
        """Validate against the schema and check that input files exist.

        Raises:
            ConfigError
        """
        super().validate()
        paths = list(self.inputs) + list(self.ranks)
        paths += [p for p in (self.relationships, self.weights) if p is not None]
        for path in paths:
            if not pathlib.Path(path).is_file():
                raise ConfigError(f'File "{path}" does not exist.')

    @property
    def config_hash(self) -> str:
        """SHA-256 of the canonical configuration.

        Output directory and pool size are excluded, since they do not
        change report content.
        """
        instance = {key: val for key, val in self.to_dict().items()
                    if key not in _UNHASHED}
        return tools.config_hash(instance)

    def n_instances(self) -> int:
        """Return the ensemble size, falling back to the command default."""
        if self.instances is not None:
            return self.instances
        if self.command == 'core':
            return _defaults.CORE_INSTANCES
        return _defaults.INSTANCES


def merge_config(command: str, flags: Mapping[str, Any],
                 config_file: Optional[str] = None) -> RunConfig:
    """Combine built-in defaults, an optional JSON config file, and flags.

    Flags override the config file, which overrides the defaults.

    Args:
        command:      Command name.
        flags:        Options given on the command line.
        config_file:  Path to JSON config file.

    Returns:
        Validated run configuration.

    Raises:
        ConfigError
    """
    if command not in COMMANDS:
        raise ConfigError(f'Unknown command {command!r}.')

    merged: Dict[str, Any] = {}
    if config_file is not None:
        path = pathlib.Path(config_file)
        if not path.is_file():
            raise ConfigError(f'Config file "{path}" does not exist.')
        try:
            from_file = _json.load(path)
        except ValueError as err:
            raise ConfigError(f'Config file "{path}" is not valid JSON: '
                              f'{err}') from err
        if not isinstance(from_file, dict):
            raise ConfigError(f'Config file "{path}" must hold an object.')
        merged.update(from_file)

    merged.update(flags)
    merged['command'] = command
    if 'inputs' not in merged:
        raise ConfigError('At least one --input is required.')

    cfg = RunConfig.from_dict(merged)
    cfg.validate()
    return cfg
