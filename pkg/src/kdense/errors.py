"""kdense/errors.py -- Exception hierarchy.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    KdenseError             Base class of all toolkit errors.
    DomainError             Precondition violated.
    ParseError              Malformed input line.
    EmptyGraphError         No usable edge after ingestion.
    DegenerateCoreError     Core extraction on a triangle-free graph.
    DegenerateRangeError    Normalization with k_max == k_min.
    ConfigError             Invalid run configuration.
    GenerationError         Null-model generation failed.
"""
from typing import Optional


class KdenseError(Exception):
    """Base class of all kdense errors."""


class DomainError(KdenseError, ValueError):
    """Argument outside of the operation's domain."""


class ParseError(DomainError):
    """Malformed line in an input file."""
    def __init__(self, msg: str, lineno: int, line: Optional[str] = None):
        self.lineno = lineno
        self.line = line
        super().__init__(f'Line {lineno}: {msg}')


class EmptyGraphError(DomainError):
    """Input does not contain a single usable edge."""


class DegenerateCoreError(DomainError):
    """Graph has no triangle, hence H_kMAX = H_2."""


class DegenerateRangeError(DomainError):
    """Index range of zero width."""


class ConfigError(KdenseError, ValueError):
    """Run configuration is invalid or incomplete."""


class GenerationError(KdenseError, RuntimeError):
    """Random graph generation failed."""
