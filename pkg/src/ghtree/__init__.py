"""Exact Gomory-Hu trees for weighted graphs and hypergraphs on few maxflows."""

from .classic import classic_steiner_tree
from .config import DEFAULT_CONFIG, GHConfig
from .decomposition import ThresholdResult, balanced_decomposition, detect_large_cc, find_threshold
from .errors import (
    CapacityOverflowError,
    GHTreeError,
    InvalidCutError,
    InvalidInputError,
    InvalidPartitionError,
    InvalidQueryError,
    OracleRefusedError,
    RandomizedFailureError,
)
from .estimator import GomoryHuTreeEstimator
from .graph import (
    ContractionMap,
    CutResult,
    WeightedGraph,
    connected_components,
    contract,
    cut_value,
    parse_graph,
    read_graph,
    write_graph,
)
from .hypergraph import Hypergraph, hyper_cut_value, parse_hypergraph, read_hypergraph, write_hypergraph
from .isolating import IsolatingCutsResult, compute_isolating_cuts, hyper_isolating_cuts
from .maxflow import FlowResult, hyper_maxflow, maxflow, oracle_maxflow
from .oracle import VerificationReport, all_pairs_mincut, enumerate_all_pairs, enumerate_mincut, verify_ghtree
from .partial import PartialTree, combine, partial_ghtree
from .recursive import classic_ghtree, compute_ghtree, hyper_ghtree
from .rng import RngHandle
from .stats import RecursionStats
from .tree import GomoryHuTree, k_components, read_tree, tree_query, write_tree

__version__ = "0.1.0"
