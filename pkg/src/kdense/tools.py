"""
Common tool library.
Licensed under the terms of the BSD-3-Clause license.

Functions:
    band            Mean, central band, and range of a sample.
    config_hash     SHA-256 of a canonical JSON rendering.
    decoded_lines   Numbered text lines of a byte stream.
    fsum_mean       Order-independent mean.
    percentile      Nearest-rank percentile.
    sort_tokens     Sort node tokens in canonical order.
    token_key       Canonical sort key of node tokens.
"""
from dataclasses import dataclass, asdict
import hashlib
import json
import math as _math
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from . import _defaults
from . errors import DomainError, ParseError
from . types import ByteSource


@dataclass(frozen=True)
class Band:
    """Summary statistics of a sample."""
    mean: float
    p_low: float
    p_high: float
    min: float
    max: float
    n: int

    def to_dict(self) -> Dict[str, Any]:
        """Returns the band as dictionary."""
        return asdict(self)


def token_key(token: str) -> Tuple[int, int, str]:
    """Canonical sort key of node tokens.

    Tokens made of ASCII digits only (AS numbers) sort numerically and
    before all other tokens, which sort lexicographically.

    Args:
        token:  Node token.

    Returns:
        Sort key.
    """
    if token.isascii() and token.isdigit():
        return (0, int(token), token)
    return (1, 0, token)


def sort_tokens(tokens: Iterable[str]) -> List[str]:
    """Sort tokens according to ``token_key``."""
    return sorted(tokens, key=token_key)


def percentile(values: Sequence[float], pct: float) -> float:
    """Nearest-rank percentile.

    Returns the smallest sample value such that at least ``pct`` percent
    of the sample is less or equal to it.

    Args:
        values:  Non-empty sample.
        pct:     Percentage in [0, 100].

    Returns:
        Percentile value.
    """
    if len(values) == 0:
        raise DomainError('Cannot compute percentile of empty sample.')
    if not 0 <= pct <= 100:
        raise DomainError(f'Percentage must be in [0, 100], got {pct}.')
    return float(np.percentile(np.asarray(values, dtype=float), pct,
                               method='inverted_cdf'))


def fsum_mean(values: Sequence[float]) -> float:
    """Mean that does not depend on the order of ``values``."""
    if len(values) == 0:
        raise DomainError('Cannot compute mean of empty sample.')
    return _math.fsum(sorted(float(val) for val in values)) / len(values)


def band(values: Sequence[float],
         bounds: Tuple[float, float] = _defaults.BAND) -> Band:
    """Compute mean, nearest-rank percentile band, minimum, and maximum.

    Args:
        values:  Non-empty sample.
        bounds:  Lower and upper percentage of the band.

    Returns:
        Band of ``values``.
    """
    vals = sorted(float(val) for val in values)
    if not vals:
        raise DomainError('Cannot summarize an empty sample.')
    return Band(fsum_mean(vals), percentile(vals, bounds[0]),
                percentile(vals, bounds[1]), vals[0], vals[-1], len(vals))


def config_hash(instance: Dict[str, Any]) -> str:
    """Return the SHA-256 hex digest of ``instance`` rendered as canonical
    JSON.

    Args:
        instance:  JSON-serializable dictionary.

    Returns:
        Hex digest.
    """
    canon = json.dumps(instance, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canon.encode('utf-8')).hexdigest()


def decoded_lines(source: ByteSource) -> Iterator[Tuple[int, str]]:
    """Iterate over the lines of ``source`` with line numbers.

    Byte lines are decoded as UTF-8.

    Args:
        source:  Byte stream or iterable of lines.

    Yields:
        Line number, starting at 1, and text.

    Raises:
        ParseError if a line is not valid UTF-8.
    """
    for lineno, raw in enumerate(source, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode('utf-8')
            except UnicodeDecodeError as err:
                raise ParseError('Not valid UTF-8.', lineno) from err
        yield lineno, raw
