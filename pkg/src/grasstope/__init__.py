"""Exact combinatorics of matroid basis polytopes and smoothness of torus
orbit closures in Grassmannians."""

from .census import (
    VerificationReport,
    enumerate_matroids,
    matroid_count,
    verify_adjacent_nonsimple,
    verify_simple_product,
    verify_vertex_promotion,
)
from .classify import (
    ClassifierVerdict,
    Factor,
    HypersimplexStats,
    ProductDecomposition,
    classify,
    hypersimplex_stats,
)
from .gaussian import GaussianRational, parse_gaussian
from .grassmann import (
    BlockSplit,
    MomentPoint,
    PlueckerVector,
    PointMatrix,
    SmoothnessReport,
    block_diagonalize,
    moment_map,
    parse_matrix,
    pluecker,
    point_matrix,
    smoothness,
    support_matroid,
)
from .kernel import BACKEND as KERNEL_BACKEND
from .matroid import (
    ComponentDecomposition,
    ConsistencyError,
    FormatError,
    Matroid,
    MinorResult,
    ValidationReport,
    components,
    direct_sum,
    matroid,
    minor,
    parse_matroid_text,
    subset_elements,
    subset_mask,
    uniform,
    validate_exchange,
)
from .polytope import (
    SimplicityVerdict,
    VertexGraph,
    balanced_swaps,
    dimension,
    edges,
    exchange_swap,
    is_simple,
    is_simple_at,
    nonsimple_neighbor,
    vertex_graph,
    vertices,
)

__version__ = "0.1.0"
