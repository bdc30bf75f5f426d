"""Fast eccentricity, center, radius and diameter approximations."""

from hyperecc.eccentricity.estimate import (
    Distortion,
    EccEstimate,
    RadiusDiameterBounds,
    bound_radius_diameter,
    estimate_eccentricities,
    estimate_from_root,
    linear_root,
)
from hyperecc.eccentricity.geodesic import extract_geodesic, middle_vertex
from hyperecc.eccentricity.scans import fp_scan, furthest_vertex, mutually_distant_pair
from hyperecc.eccentricity.trees import (
    RootChoice,
    SpanningTree,
    bfs_tree,
    build_approx_tree,
    choose_root,
    tree_diameter,
    tree_eccentricities,
)

__all__ = [
    "Distortion",
    "EccEstimate",
    "RadiusDiameterBounds",
    "RootChoice",
    "SpanningTree",
    "bfs_tree",
    "bound_radius_diameter",
    "build_approx_tree",
    "choose_root",
    "estimate_eccentricities",
    "estimate_from_root",
    "extract_geodesic",
    "fp_scan",
    "furthest_vertex",
    "linear_root",
    "middle_vertex",
    "mutually_distant_pair",
    "tree_diameter",
    "tree_eccentricities",
]
