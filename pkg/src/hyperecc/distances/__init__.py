"""All-pairs distance approximation on a single BFS tree."""

from hyperecc.distances.admissible import (
    AdmissibleDelta,
    distance_error_stats,
    sample_sources,
    smallest_admissible_delta,
)
from hyperecc.distances.estimators import (
    CheckedEstimator,
    DistanceEstimator,
    ExactEstimator,
    MatrixProximity,
    Proximity,
    StretchedEstimator,
    declared_threshold,
)
from hyperecc.distances.power import PowerReach, power_reachability
from hyperecc.distances.separation import closed_form_estimate, distance_sandwich, separation_level
from hyperecc.distances.storage import TriangularMatrix
from hyperecc.distances.sweep import (
    DistanceEstimate,
    LevelObserver,
    approximate_all_distances,
    approximate_all_distances_estimated,
    iter_sweep_rows,
)

__all__ = [
    "AdmissibleDelta",
    "CheckedEstimator",
    "DistanceEstimate",
    "DistanceEstimator",
    "ExactEstimator",
    "LevelObserver",
    "MatrixProximity",
    "PowerReach",
    "Proximity",
    "StretchedEstimator",
    "TriangularMatrix",
    "approximate_all_distances",
    "approximate_all_distances_estimated",
    "closed_form_estimate",
    "declared_threshold",
    "distance_error_stats",
    "distance_sandwich",
    "iter_sweep_rows",
    "power_reachability",
    "sample_sources",
    "separation_level",
    "smallest_admissible_delta",
]
