"""kdense/metrics -- Structural statistics.
"""
from . structure import (BETWEENNESS_CONVENTION, as_node_values,
                         average_neighbor_degree, average_neighbor_degrees,
                         betweenness, clustering, clusterings,
                         node_metric_table, per_degree_series,
                         pooled_degree_series, shortest_path_distribution)
from . binning import DegreeBinnedSeries, logbin_by_degree
from . motifs import (MOTIF_CLASSES, MOTIF_CONVENTION, MotifCensus, ZScore,
                      motif_census, motif_zscores)
