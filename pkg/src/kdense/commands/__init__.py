"""kdense/commands -- Command line analyses.

Licensed under the terms of the BSD-3-Clause license.
"""
from . config import RunConfig, merge_config
from . main import build_parser, execute, main
