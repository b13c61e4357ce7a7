"""
Packet states and their Fubini-Study geometry.

This package embeds classical (phase) space into the space of rays as
Gaussian packets and provides the distances, identities and tangent
frames used by the dynamics and walk modules.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__description__ = "Packet embedding and Fubini-Study geometry"

from .geometry import (
    TangentFrame as TangentFrame,
    euclidean_distance_from_angle as euclidean_distance_from_angle,
    fubini_study_distance as fubini_study_distance,
    fubini_study_distance_vectors as fubini_study_distance_vectors,
    metric_identity_residual as metric_identity_residual,
    phase_space_metric_identity_residual as phase_space_metric_identity_residual,
    shifted_operator_identity_residuals as shifted_operator_identity_residuals,
    tangent_frame as tangent_frame,
)
from .packets import (
    check_margin as check_margin,
    gram_min_singular_value as gram_min_singular_value,
    make_packet as make_packet,
    overlap_discrepancy as overlap_discrepancy,
    overlap_gaussian as overlap_gaussian,
    packet_gram_matrix as packet_gram_matrix,
    phase_space_overlap_sq as phase_space_overlap_sq,
)

__all__ = [
    "TangentFrame",
    "euclidean_distance_from_angle",
    "fubini_study_distance",
    "fubini_study_distance_vectors",
    "metric_identity_residual",
    "phase_space_metric_identity_residual",
    "shifted_operator_identity_residuals",
    "tangent_frame",
    "check_margin",
    "gram_min_singular_value",
    "make_packet",
    "overlap_discrepancy",
    "overlap_gaussian",
    "packet_gram_matrix",
    "phase_space_overlap_sq",
]
