"""Conditional multidimensional scaling and conditional ISOMAP.

Given an N x N dissimilarity matrix and known auxiliary coordinates for
each point, learn an embedding U together with a transform B of the
auxiliary coordinates so that distances in the joint space reproduce the
dissimilarities. Marginalizing the known structure out of U this way can
surface manifold parameters that plain MDS hides.
"""

from condmds.datasets import KinshipData, load_kinship
from condmds.estimators import ConditionalIsomap, ConditionalMDS
from condmds.exceptions import (
    GraphDisconnectedError,
    InputValidationError,
    NumericError,
)
from condmds.geodesic import (
    IsomapFitReport,
    NeighborhoodGraph,
    cond_isomap,
    connected_components,
    neighborhood_graph,
    shortest_path_matrix,
)
from condmds.linalg import laplacian_pinv, pseudo_inverse
from condmds.matrix_io import (
    parse_auxiliary_csv,
    parse_dissimilarity_csv,
    serialize_auxiliary_csv,
    serialize_dissimilarity_csv,
)
from condmds.smacof import (
    FitReport,
    cond_smacof,
    initialize_embedding,
    update_embedding,
    update_transform,
    update_transform_diag,
)
from condmds.stress import (
    DissimilarityTransform,
    Operators,
    StressDecomposition,
    auxiliary_gram,
    build_operators,
    conditional_distance,
    conditional_stress,
    guttman_coefficients,
    is_uniform_weights,
    joint_distance_matrix,
    majorizer_value,
    stress_decomposition,
    stress_from_distances,
    weight_laplacian,
)
from condmds.svg import scatter_svg
from condmds.weights import resolve_weights, weights_sammon, weights_uniform

__version__ = "0.1.0"

__all__ = [
    "ConditionalMDS",
    "ConditionalIsomap",
    "cond_smacof",
    "cond_isomap",
    "FitReport",
    "IsomapFitReport",
    "initialize_embedding",
    "update_embedding",
    "update_transform",
    "update_transform_diag",
    "weight_laplacian",
    "auxiliary_gram",
    "build_operators",
    "Operators",
    "is_uniform_weights",
    "conditional_distance",
    "joint_distance_matrix",
    "conditional_stress",
    "stress_from_distances",
    "stress_decomposition",
    "StressDecomposition",
    "guttman_coefficients",
    "majorizer_value",
    "DissimilarityTransform",
    "pseudo_inverse",
    "laplacian_pinv",
    "neighborhood_graph",
    "NeighborhoodGraph",
    "connected_components",
    "shortest_path_matrix",
    "weights_uniform",
    "weights_sammon",
    "resolve_weights",
    "parse_dissimilarity_csv",
    "parse_auxiliary_csv",
    "serialize_dissimilarity_csv",
    "serialize_auxiliary_csv",
    "load_kinship",
    "KinshipData",
    "scatter_svg",
    "InputValidationError",
    "GraphDisconnectedError",
    "NumericError",
]
