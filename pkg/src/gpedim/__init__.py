"""gpedim: distance oracles and edge-dimension verification for P(n, k).

The package models generalized Petersen graphs, provides BFS ground-truth
distances together with O(1) closed forms for P(n, 3), verifies edge
resolving sets, and reproduces the computational pipeline showing that the
edge dimension of P(n, 3) is 4 for n >= 11.
"""

from .bench import BenchReport, generate_queries, run_bench
from .distance import (
    FORMULA_MIN_N,
    Orientation,
    ResidueContext,
    ResidueDecomp,
    bfs_all_vertex_distances,
    bfs_vertex_distance,
    bfs_vertex_edge_distance,
    closed_vertex_distance,
    closed_vertex_edge_distance,
    context,
    decomp3,
    directional_distance,
    directional_distances,
    distance,
    undeviating_counterexample,
)
from .errors import (
    CertificateError,
    GPEdimError,
    GraphParameterError,
    SearchBudgetError,
    UnsupportedRangeError,
    VerificationError,
)
from .graph import (
    Edge,
    EdgeKind,
    GPGraph,
    Layer,
    Vertex,
    build,
    from_json,
    parse_edge,
    parse_vertex,
)
from .resolving import (
    EqualPairSet,
    ResolutionVerdict,
    edge_representation,
    equal_pair_set_brute,
    equal_pair_set_closed,
    is_edge_resolving,
    resolving_tetrad,
)
from .theorem import (
    SHAPES,
    CanonicalPair,
    Certificate,
    SporadicPairs,
    TriadSweep,
    canonical_pairs,
    canonicalize_triple,
    certified_edge_dimension,
    common_equal_index,
    confusable_witness,
    edge_dimension_exact,
    shape_landmarks,
    sporadic_pairs,
    verify_no_resolving_triad,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "CanonicalPair",
    "Certificate",
    "CertificateError",
    "Edge",
    "EdgeKind",
    "EqualPairSet",
    "FORMULA_MIN_N",
    "GPEdimError",
    "GPGraph",
    "GraphParameterError",
    "Layer",
    "Orientation",
    "ResidueContext",
    "ResidueDecomp",
    "ResolutionVerdict",
    "SHAPES",
    "SearchBudgetError",
    "SporadicPairs",
    "TriadSweep",
    "UnsupportedRangeError",
    "VerificationError",
    "Vertex",
    "bfs_all_vertex_distances",
    "bfs_vertex_distance",
    "bfs_vertex_edge_distance",
    "build",
    "canonical_pairs",
    "canonicalize_triple",
    "certified_edge_dimension",
    "closed_vertex_distance",
    "closed_vertex_edge_distance",
    "common_equal_index",
    "confusable_witness",
    "context",
    "decomp3",
    "directional_distance",
    "directional_distances",
    "distance",
    "edge_dimension_exact",
    "edge_representation",
    "equal_pair_set_brute",
    "equal_pair_set_closed",
    "from_json",
    "generate_queries",
    "is_edge_resolving",
    "parse_edge",
    "parse_vertex",
    "resolving_tetrad",
    "run_bench",
    "shape_landmarks",
    "sporadic_pairs",
    "undeviating_counterexample",
    "verify_no_resolving_triad",
]
