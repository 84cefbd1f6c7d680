"""Lazy exact samplers for preferential attachment and recursive trees.

Adjacency queries are answered on demand in polylogarithmic time, space,
and random bits, with the joint answer law identical to sampling the whole
graph up front.
"""

from .bagen import BAGenerator
from .batch import (BATCH_SAMPLERS, GraphSample, batch_ba, batch_rrt, batch_z,
                    enumerate_exact)
from .errors import InternalConsistencyError
from .linktree import LinkTree, NaiveLinkTree, RRTGenerator, sample_candidate_rank
from .randomness import BitSource, COPY, DIRECT
from .ranks import CandidateIndex
from .sparse import ChildSets, LazyMap
from .stats import (chi_square_gof, chi_square_two_sample, degree_stats,
                    empirical_law, reconstruct_via_sweep, tree_metrics,
                    tv_distance)

__version__ = "0.1.0"

__all__ = [
    "BAGenerator", "BATCH_SAMPLERS", "BitSource", "CandidateIndex",
    "ChildSets", "COPY", "DIRECT", "GraphSample", "InternalConsistencyError",
    "LazyMap", "LinkTree", "NaiveLinkTree", "RRTGenerator",
    "batch_ba", "batch_rrt", "batch_z", "chi_square_gof",
    "chi_square_two_sample", "degree_stats", "empirical_law",
    "enumerate_exact", "reconstruct_via_sweep", "sample_candidate_rank",
    "tree_metrics", "tv_distance",
]
