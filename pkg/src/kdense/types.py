"""kdense/types.py -- Collection of static type hints.
Licensed under the terms of the BSD-3-Clause license.
"""
import pathlib
from typing import (BinaryIO, Collection, Dict, FrozenSet, Iterable, Tuple,
                    Union)
import numpy as np


Array = np.ndarray

PathType = Union[str, pathlib.Path]
Schema = Dict[str, Collection[str]]

NodeId = int
Edge = Tuple[int, int]
EdgeSet = FrozenSet[Edge]
NodeSet = FrozenSet[int]
TokenSet = FrozenSet[str]
TokenPair = Tuple[str, str]

Histogram = Dict[int, int]
Seed = Union[int, np.random.Generator, None]

ByteSource = Union[BinaryIO, Iterable[bytes]]
