"""kdense/asdata -- AS-specific side data.

Licensed under the terms of the BSD-3-Clause license.
"""
from . relationships import (CustomerCones, RelationshipGraph,
                             cone_distribution, cone_weight, customer_cone,
                             load_relationship_file, load_relationships,
                             load_weights)
from . ranks import RankedList, load_ranks, rank_overlap, top_n_by_metric
