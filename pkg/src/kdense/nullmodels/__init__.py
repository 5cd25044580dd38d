"""kdense/nullmodels -- dK-series null models.
"""
from . generators import (DegreeSequence, JointDegreeMatrix, degree_sequence,
                          generate_0k, generate_1k, generate_2k, is_graphical,
                          joint_degree_matrix)
from . ensemble import (EnsembleManifest, EnsembleSpec, generate_ensemble,
                        generate_instance, iter_ensemble)
from . swaps import SwapEngine, swap_count
