""" kdense/container.py -- Container Classes.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    Params
"""
from dataclasses import dataclass, asdict, fields
import json
import pathlib
from typing import Any, ClassVar, Dict, Type, TypeVar

import jsonschema

from . errors import ConfigError
from . types import Schema, PathType


GenericParams = TypeVar('GenericParams', bound='Params')

@dataclass
class Params:
    """Parmeter base class."""
    _schema: ClassVar[Schema] = {}

    @property
    def schema(self) -> dict:
        """Returns the serialization schema."""
        return self._schema

    @classmethod
    def from_dict(cls: Type[GenericParams], instance: dict) -> GenericParams:
        """Construct Params from dictionary.

        Unknown keys raise ``ConfigError``.
        """
        known = {fld.name for fld in fields(cls)}
        unknown = set(instance) - known
        if unknown:
            raise ConfigError(f'Unknown parameters: {sorted(unknown)}.')
        return cls(**instance)

    @classmethod
    def from_json(cls: Type[GenericParams], path: PathType) -> GenericParams:
        """Construct Params from JSON file."""
        with pathlib.Path(path).open('r') as fobj:
            return cls.from_dict(json.load(fobj))

    def to_dict(self) -> Dict[str, Any]:
        """Returns parameters as dictionary."""
        return asdict(self)

    def validate(self) -> None:
        """Validate parameters against the schema.

        Raises:
            ConfigError
        """
        try:
            jsonschema.validate(self.to_dict(), self.schema,
                                jsonschema.Draft7Validator)
        except jsonschema.ValidationError as err:
            raise ConfigError(f'{type(self).__name__}: {err.message}') from err

    def to_json(self, path: PathType) -> None:
        """Write parameters to JSON file.

        Args:
            path:  File path.
        """
        self.validate()
        with pathlib.Path(path).open('w') as fobj:
            json.dump(self.to_dict(), fobj, sort_keys=True, indent=2)
