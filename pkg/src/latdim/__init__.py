"""Minimum-dimension isometric embeddings of graphs into the integer lattice."""

from .embed import (
    LatticeEmbedding,
    PathDecomposition,
    PipelineResult,
    coordinates,
    embed,
    hypercube_from_embedding,
    matching_from_embedding,
    path_decomposition,
    verify_isometry,
)
from .graph import (
    Graph,
    all_pairs_distances,
    parse_edge_list,
    render_edge_list,
    validate,
)
from .matching import (
    Matching,
    brute_force_matching_size,
    maximum_matching,
    verify_matching,
)
from .partial_cube import (
    HypercubeLabeling,
    labeling_from_classes,
    recognize,
    theta_classes,
    verify_labeling,
)
from .semicube import SemicubeFamily, SemicubeGraph, build, export_dot, semicubes

__all__ = [
    "Graph",
    "HypercubeLabeling",
    "LatticeEmbedding",
    "Matching",
    "PathDecomposition",
    "PipelineResult",
    "SemicubeFamily",
    "SemicubeGraph",
    "all_pairs_distances",
    "brute_force_matching_size",
    "build",
    "coordinates",
    "embed",
    "export_dot",
    "hypercube_from_embedding",
    "labeling_from_classes",
    "matching_from_embedding",
    "maximum_matching",
    "parse_edge_list",
    "path_decomposition",
    "recognize",
    "render_edge_list",
    "semicubes",
    "theta_classes",
    "validate",
    "verify_isometry",
    "verify_labeling",
    "verify_matching",
]
