# Licensed under the terms of the BSD-3-Clause license.

"""
kdense/_defaults.py --  Default definitions
"""
import pathlib

from . import KDENSE_PATH


SCHEMA_EXT = '.schema.json'
SCHEMA_DIR_PATH = pathlib.Path(KDENSE_PATH).joinpath('schema')

# Profile binning
BIN_WIDTH = 0.05

# Null models
INSTANCES = 10
CORE_INSTANCES = 20
SWAP_FACTOR = 10.0
PROPOSAL_FACTOR = 100
SWAP_BATCH = 4096

# Degree binning
BINS_PER_DECADE = 10

# Central band reported as [p_low, p_high]
BAND = (10, 90)

# Average degree log fit, k ~ a ln N - b
FIT_A = 1.3
FIT_B = 7.5

# Smallest k of the k-dense hierarchy; H_2 is the whole graph
K_MIN = 2

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
INCOMPLETE_MARKER = 'INCOMPLETE'
