# Licensed under the terms of the BSD-3-Clause license.

"""
kdense/__init__.py -- Main package initialization.
"""

import os as _os

try:
    from importlib import metadata as _metadata
except ImportError:     # pragma: no cover
    import importlib_metadata as _metadata     # type: ignore


try:
    __version__ = _metadata.version('kdense')
except _metadata.PackageNotFoundError:
    __version__ = '0.0.0+unknown'

KDENSE_PATH = _os.path.dirname(_os.path.realpath(__file__))
