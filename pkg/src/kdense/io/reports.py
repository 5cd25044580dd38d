"""kdense/io/reports.py -- Report files with provenance header.

Licensed under the terms of the BSD-3-Clause license.

Every report starts with a header holding toolkit version, configuration
hash, and seed. CSV reports carry it as ``# key: value`` comment lines,
JSON reports as ``header`` member next to ``data``. Reports contain no
wall-clock time, so equal configurations yield byte-identical files.

Classes:
    ReportHeader    Provenance of a report.
    ReportWriter    Write reports of one run to a directory.

Functions:
    write_csv       Write a data frame with header.
    write_json      Write a JSON document with header.
"""
from dataclasses import dataclass, asdict
import logging
import pathlib
from typing import Any, Dict, List, Optional

import pandas as pd

from .. errors import ConfigError
from .. types import PathType
from . import json as _json


logger = logging.getLogger(__name__)

REPORT_FORMATS = ('csv', 'json')


@dataclass(frozen=True)
class ReportHeader:
    """Provenance of a report."""
    version: str
    config_hash: str
    seed: Optional[int]
    command: str

    def to_dict(self) -> Dict[str, Any]:
        """Returns the header as dictionary."""
        return asdict(self)

    def lines(self) -> List[str]:
        """Return the header as CSV comment lines."""
        return [f'# {key}: {val}' for key, val in sorted(self.to_dict().items())]


def _json_records(frame: pd.DataFrame) -> List[Dict[str, Any]]:
    clean = frame.astype(object).where(frame.notna(), None)
    return clean.to_dict(orient='records')


def write_csv(frame: pd.DataFrame, path: PathType,
              header: ReportHeader) -> pathlib.Path:
    """Write ``frame`` to ``path`` as CSV preceded by ``header``.

    Args:
        frame:   Report data.
        path:    Output file path.
        header:  Report header.

    Returns:
        Output path.
    """
    path = pathlib.Path(path)
    with path.open('w', encoding='utf-8', newline='\n') as fobj:
        for line in header.lines():
            fobj.write(line + '\n')
        frame.to_csv(fobj, index=False, lineterminator='\n')
    return path


def write_json(obj: Any, path: PathType, header: ReportHeader) -> pathlib.Path:
    """Write ``obj`` to ``path`` as ``{"header": ..., "data": ...}``.

    Data frames are written as list of records.

    Args:
        obj:     Report data.
        path:    Output file path.
        header:  Report header.

    Returns:
        Output path.
    """
    if isinstance(obj, pd.DataFrame):
        obj = _json_records(obj)
    path = pathlib.Path(path)
    _json.dump({'header': header.to_dict(), 'data': obj}, path)
    return path


class ReportWriter:
    """Write the reports of one run into an output directory."""
    def __init__(self, out_dir: PathType, header: ReportHeader,
                 fmt: str = 'csv') -> None:
        """
        Args:
            out_dir:  Existing output directory.
            header:   Header of every report.
            fmt:      Format of tabular reports, ``csv`` or ``json``.

        Raises:
            ConfigError on unknown formats.
        """
        if fmt not in REPORT_FORMATS:
            raise ConfigError(f'Unknown report format {fmt!r}.')
        self.out_dir = pathlib.Path(out_dir)
        self.header = header
        self.fmt = fmt
        self.written: List[pathlib.Path] = []

    def table(self, name: str, frame: pd.DataFrame) -> pathlib.Path:
        """Write tabular report ``name`` in the configured format."""
        path = self.out_dir.joinpath(f'{name}.{self.fmt}')
        if self.fmt == 'csv':
            write_csv(frame, path, self.header)
        else:
            write_json(frame, path, self.header)
        return self._register(path)

    def document(self, name: str, obj: Any) -> pathlib.Path:
        """Write structured report ``name`` as JSON."""
        path = self.out_dir.joinpath(f'{name}.json')
        write_json(obj, path, self.header)
        return self._register(path)

    def _register(self, path: pathlib.Path) -> pathlib.Path:
        logger.debug('Wrote %s', path)
        self.written.append(path)
        return path
