"""Tests for FP scans, geodesics, approximating trees and eccentricity estimates."""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from strategies import connected_graphs, to_networkx, trees

from hyperecc.eccentricity import (
    EccEstimate,
    SpanningTree,
    bfs_tree,
    bound_radius_diameter,
    build_approx_tree,
    choose_root,
    estimate_eccentricities,
    estimate_from_root,
    extract_geodesic,
    fp_scan,
    furthest_vertex,
    linear_root,
    middle_vertex,
    mutually_distant_pair,
    tree_diameter,
    tree_eccentricities,
)
from hyperecc.errors import MissingOracleError
from hyperecc.graph import Graph
from hyperecc.graph import generators as gen
from hyperecc.hyperbolicity import four_point_delta
from hyperecc.models import EccStrategy, GeodesicPath, TreeVariant
from hyperecc.oracle import all_eccentricities

# --- scans and geodesics ---------------------------------------------------


def test_furthest_vertex_prefers_lowest_id(p5: Graph) -> None:
    assert furthest_vertex(p5, 2) == 0
    assert furthest_vertex(gen.star_graph(3), 0) == 1
    far, layering = fp_scan(p5, 2)
    assert far == 0
    assert layering.source == 2


def test_mutual_pair_p5_from_middle(p5: Graph) -> None:
    pair = mutually_distant_pair(p5, 2)
    assert (pair.u, pair.v) == (0, 4)
    assert pair.distance == 4
    assert pair.scans == 3
    assert pair.trace == (0, 4, 0)
    assert pair.trace_distances == (2, 4, 4)


def test_mutual_pair_c6_antipodal(c6: Graph) -> None:
    pair = mutually_distant_pair(c6, 0)
    assert (pair.u, pair.v) == (0, 3)
    assert pair.distance == 3
    assert pair.scans == 2
    assert pair.trace == (3, 0)


def test_mutual_pair_single_vertex() -> None:
    pair = mutually_distant_pair(gen.path_graph(1))
    assert (pair.u, pair.v, pair.distance) == (0, 0, 0)


def test_extract_geodesic(p5: Graph, c6: Graph) -> None:
    assert extract_geodesic(p5, 0, 4).vertices == (0, 1, 2, 3, 4)
    path = extract_geodesic(c6, 0, 3)
    assert path.vertices == (0, 1, 2, 3)
    assert path.length == 3
    assert (path.start, path.end) == (0, 3)


def test_middle_vertex_rounding() -> None:
    assert middle_vertex(GeodesicPath(vertices=(0, 1, 2, 3, 4))) == 2
    assert middle_vertex(GeodesicPath(vertices=(0, 1, 2, 3))) == 1
    assert middle_vertex(GeodesicPath(vertices=(7,))) == 7


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=25))
def test_geodesics_are_shortest_paths(g: Graph) -> None:
    pair = mutually_distant_pair(g)
    path = extract_geodesic(g, pair.u, pair.v)
    assert path.length == nx.shortest_path_length(to_networkx(g), pair.u, pair.v)
    assert all(g.has_edge(a, b) for a, b in zip(path.vertices, path.vertices[1:], strict=False))
    profile = all_eccentricities(g)
    assert profile.ecc[pair.u] == profile.ecc[pair.v] == pair.distance


# --- trees -----------------------------------------------------------------


def test_c6_t1_tree(c6: Graph) -> None:
    choice = choose_root(c6, TreeVariant.T1)
    assert choice.root == 1
    assert choice.geodesic.vertices == (0, 1, 2, 3)
    tree = tree_eccentricities(build_approx_tree(c6, TreeVariant.T1))
    # the BFS(1) tree is the path 3-2-1-0-5-4
    assert sorted(tree.graph.edges().tolist()) == [[0, 1], [0, 5], [1, 2], [2, 3], [4, 5]]
    assert tree.tree_ecc is not None
    assert tree.tree_ecc.tolist() == [3, 3, 4, 5, 5, 4]
    assert tree.tree_center == (0, 1)
    assert tree.tree_rad == 3
    assert tree_diameter(tree) == 5
    assert tree.spans(c6)


def test_tree_eccentricities_of_path_and_star(p5: Graph, star: Graph) -> None:
    path = tree_eccentricities(bfs_tree(p5, 0))
    assert path.tree_ecc is not None
    assert path.tree_ecc.tolist() == [4, 3, 2, 3, 4]
    assert path.tree_center == (2,)
    assert path.tree_rad == 2
    hub = tree_eccentricities(bfs_tree(star, 3))
    assert hub.tree_ecc is not None
    assert hub.tree_ecc.tolist() == [1, 2, 2, 2, 2]
    assert hub.tree_center == (0,)
    assert tree_diameter(SpanningTree(root=0, parent=hub.parent)) == 2


def test_t2_and_t3_need_the_oracle(p5: Graph) -> None:
    with pytest.raises(MissingOracleError, match="requires exact profile"):
        build_approx_tree(p5, TreeVariant.T2)
    with pytest.raises(MissingOracleError, match="requires exact profile"):
        choose_root(p5, TreeVariant.T3)


def test_t2_and_t3_roots_on_p5(p5: Graph) -> None:
    profile = all_eccentricities(p5)
    t2 = choose_root(p5, TreeVariant.T2, profile)
    assert t2.far_vertex == 4
    assert t2.geodesic.vertices == (4, 3, 2, 1, 0)
    assert t2.root == 2
    assert choose_root(p5, TreeVariant.T3, profile).root == 2


@settings(max_examples=30, deadline=None)
@given(trees(max_n=20))
def test_tree_inputs_are_estimated_exactly(g: Graph) -> None:
    profile = all_eccentricities(g)
    for variant in TreeVariant:
        est = estimate_from_root(g, choose_root(g, variant, profile), profile)
        assert est.distortion is not None
        assert est.distortion.k_max == 0
    for strategy in EccStrategy:
        assert estimate_eccentricities(g, strategy).estimate.tolist() == profile.ecc.tolist()


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=20))
def test_tree_estimates_within_additive_bounds(g: Graph) -> None:
    profile = all_eccentricities(g)
    tau = four_point_delta(g).tau
    slack = {"T1": 3 * tau + 1, "T2": 6 * tau + 1, "linear": 6 * tau + 1}
    roots = [choose_root(g, TreeVariant.T1), choose_root(g, TreeVariant.T2, profile), linear_root(g)]
    for root in roots:
        est = estimate_from_root(g, root, profile)
        assert est.tree.spans(g)
        brute = nx.eccentricity(to_networkx(est.tree.graph))
        assert est.estimate.tolist() == [brute[v] for v in range(g.n)]
        assert (profile.ecc <= est.estimate).all()
        assert (est.estimate <= profile.ecc + slack[root.label]).all()


# --- estimates -------------------------------------------------------------


def test_refined_estimate_on_c6(c6: Graph) -> None:
    profile = all_eccentricities(c6)
    est = estimate_eccentricities(c6, EccStrategy.REFINED, profile)
    assert isinstance(est, EccEstimate)
    assert est.variant == "refined"
    assert est.root.root == 1
    assert int(est.estimate[3]) == 5
    assert est.distortion is not None
    assert est.distortion.k.tolist() == [0, 0, 1, 2, 2, 1]
    assert est.distortion.k_max == 2
    assert est.distortion.k_avg == pytest.approx(1.0)
    assert est.distortion.histogram == {0: 2, 1: 2, 2: 2}
    assert est.distortion.percentages()[2] == pytest.approx(100 / 3)


def test_estimate_without_oracle_has_no_distortion(p5: Graph) -> None:
    est = estimate_eccentricities(p5, EccStrategy.LINEAR)
    assert est.distortion is None
    assert est.variant == "linear"
    assert est.with_oracle(all_eccentricities(p5)).distortion is not None


def test_bound_radius_diameter_p5(p5: Graph) -> None:
    refined = bound_radius_diameter(p5, EccStrategy.REFINED)
    assert refined.center == 2
    assert refined.ecc_center == 2
    assert refined.diam_lower == 4
    assert refined.rad_interval == (2, 2)
    assert refined.diam_interval == (4, 4)
    linear = bound_radius_diameter(p5, EccStrategy.LINEAR)
    assert linear.center == 2
    assert linear.far_vertex == 4
    assert linear.scans == 3


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=20))
def test_radius_diameter_bounds_contain_truth(g: Graph) -> None:
    profile = all_eccentricities(g)
    tau = four_point_delta(g).tau
    for strategy in EccStrategy:
        bounds = bound_radius_diameter(g, strategy)
        lo, hi = bounds.rad_interval
        assert lo <= profile.rad <= hi
        lo, hi = bounds.diam_interval
        assert lo <= profile.diam <= hi
    linear = bound_radius_diameter(g, EccStrategy.LINEAR)
    assert profile.ecc[linear.far_vertex] >= profile.diam - 2 * tau
