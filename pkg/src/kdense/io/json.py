"""kdense/io/json.py -- General JSON IO.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    ReportEncoder

Functions:
    dump
    dumps
    load
    load_schema
"""
import json
import math
import pathlib
from typing import Any

import jsonschema
import numpy as np

from .. _defaults import SCHEMA_DIR_PATH, SCHEMA_EXT
from .. types import PathType


def load_schema(schema_name: str) -> dict:
    """Load a JSON schema.

    This function searches within kdense's own schema repository.
    If a schema is found it is additionally validated agains Draft 7.

    Args:
        schema_name:  Name of schema. Must be file name without extension.

    Returns:
        Schema instance.

    Raises:
        IOError
    """
    schema_path = SCHEMA_DIR_PATH.joinpath(schema_name + SCHEMA_EXT)
    if schema_path.is_file():
        with schema_path.open('r') as fobj:
            schema = json.load(fobj)
        jsonschema.Draft7Validator.check_schema(schema)
        return schema
    raise IOError(f'Schema ``{schema_path.name}`` not found.')


def dumps(obj: Any) -> str:
    """Encode ``obj`` as canonical JSON string.

    Keys are sorted and non-finite floats are written as strings, so that
    equal objects always produce equal output.
    """
    return json.dumps(_finite(obj), cls=ReportEncoder, sort_keys=True,
                      indent=2, allow_nan=False) + '\n'


def dump(obj: Any, path: PathType) -> None:
    """Write ``obj`` to JSON file.

    This function can handel numpy scalars and arrays.

    Args:
        obj:   Object to be encoded.
        path:  Output file path.
    """
    path = pathlib.Path(path)
    with path.open('w', encoding='utf-8', newline='\n') as json_file:
        json_file.write(dumps(obj))


def load(path: PathType) -> Any:
    """Load JSON file.

    Args:
        path: Path to file.

    Returns:
        Decoded JSON document.
    """
    path = pathlib.Path(path)
    with path.open('r', encoding='utf-8') as fobj:
        return json.load(fobj)


def _finite(obj: Any) -> Any:
    if isinstance(obj, (float, np.floating)) and not math.isfinite(obj):
        return str(float(obj))
    if isinstance(obj, dict):
        return {key: _finite(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(val) for val in obj]
    if isinstance(obj, np.ndarray):
        return [_finite(val) for val in obj.tolist()]
    return obj


class ReportEncoder(json.JSONEncoder):
    # pylint: disable=E0202
    # Issue: False positive for E0202 (method-hidden) #414
    # https://github.com/PyCQA/pylint/issues/414
    """Encode numpy scalars, arrays, and sets to JSON.

    Simply set the ``cls`` parameter of the dump method to this class.
    """
    def default(self, inp: Any) -> Any:
        """Custom JSON encoder for numpy types. Other types are passed
        on to ``JSONEncoder.default``.

        Args:
            inp:  Object to encode.

        Returns:
            JSON-serializable object.
        """
        if isinstance(inp, np.integer):
            return int(inp)
        if isinstance(inp, np.floating):
            return float(inp)
        if isinstance(inp, np.bool_):
            return bool(inp)
        if isinstance(inp, np.ndarray):
            return inp.tolist()
        if isinstance(inp, (set, frozenset)):
            return sorted(inp)
        return json.JSONEncoder.default(self, inp)
