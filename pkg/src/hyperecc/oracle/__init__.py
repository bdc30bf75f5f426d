"""Exact quadratic oracles used as ground truth."""

from hyperecc.oracle.exact import (
    CenterGeometry,
    DistanceMatrix,
    EccentricityProfile,
    all_eccentricities,
    ball_cover_radius,
    center_geometry,
    check_oracle_budget,
    distance_matrix,
    distance_rows,
    distance_to_set,
    eccentricity_layer,
    furthest_set,
    iter_distance_rows,
    profile_from_matrix,
)

__all__ = [
    "CenterGeometry",
    "DistanceMatrix",
    "EccentricityProfile",
    "all_eccentricities",
    "ball_cover_radius",
    "center_geometry",
    "check_oracle_budget",
    "distance_matrix",
    "distance_rows",
    "distance_to_set",
    "eccentricity_layer",
    "furthest_set",
    "iter_distance_rows",
    "profile_from_matrix",
]
