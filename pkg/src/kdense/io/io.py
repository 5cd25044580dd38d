"""kdense/io/io.py -- General I/O functionallity.

Licensed under the terms of the BSD-3-Clause license.

Functions:
    clear_incomplete    Remove the incomplete marker of a directory.
    generate_outpath    Compute path for report output.
    make_outdir         Create an output directory.
    mark_incomplete     Flag a directory as holding partial results.
"""
import pathlib
from typing import Optional

from .. import _defaults
from .. errors import ConfigError
from .. types import PathType


def generate_outpath(in_path: PathType,
                     out_path: Optional[PathType],
                     suffix: Optional[str] = None) -> pathlib.Path:
    """Generates file paths for report files.

    If ``out_path`` is ``None``, the snapshot name of ``in_path``, i.e.,
    the file name up to the first dot, is taken with ``suffix`` appended.
    If ``out_path`` is a directory, the same name is placed inside.

    Args:
        in_path:   Path to file under analysis.
        out_path:  Output file or directory.
        suffix:    Name suffix including extension, e.g. ``'_nodes.csv'``.

    Returns:
        Valid output path.

    Raises:
        ConfigError if the parent directory does not exist.
    """
    in_path = pathlib.Path(in_path)
    default_fname = in_path.name.split('.')[0] or in_path.name
    if suffix is not None:
        default_fname += suffix

    if out_path is None:
        return pathlib.Path(default_fname)

    out_path = pathlib.Path(out_path)
    if not out_path.suffix:
        out_path = out_path.joinpath(default_fname)
    if not out_path.parent.is_dir():
        raise ConfigError(f'Path "{out_path.parent!s}" does not exist.')
    return out_path


def make_outdir(path: PathType) -> pathlib.Path:
    """Create the output directory ``path`` including parents.

    Raises:
        ConfigError if ``path`` exists but is not a directory.
    """
    path = pathlib.Path(path)
    if path.exists() and not path.is_dir():
        raise ConfigError(f'Output path "{path!s}" is not a directory.')
    path.mkdir(parents=True, exist_ok=True)
    return path


def mark_incomplete(out_dir: PathType, reason: str) -> pathlib.Path:
    """Write the incomplete marker file to ``out_dir``.

    Args:
        out_dir:  Output directory.
        reason:   Error message stored in the marker.

    Returns:
        Path of the marker file.
    """
    marker = pathlib.Path(out_dir).joinpath(_defaults.INCOMPLETE_MARKER)
    with marker.open('w', encoding='utf-8', newline='\n') as fobj:
        fobj.write(reason.rstrip('\n') + '\n')
    return marker


def clear_incomplete(out_dir: PathType) -> None:
    """Remove a stale incomplete marker from ``out_dir``."""
    marker = pathlib.Path(out_dir).joinpath(_defaults.INCOMPLETE_MARKER)
    if marker.is_file():
        marker.unlink()
