"""Tests for Gromov products and the four-point hyperbolicity enumeration."""

from __future__ import annotations

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import connected_graphs, trees

from hyperecc.errors import BudgetExceededError
from hyperecc.graph import Graph
from hyperecc.graph import generators as gen
from hyperecc.hyperbolicity import (
    four_point_delta,
    gromov_product,
    hyperbolicity,
    quadruple_delta,
    sample_delta,
)
from hyperecc.models import HalfInt
from hyperecc.oracle import distance_matrix


def test_gromov_product_examples(p5: Graph, c6: Graph) -> None:
    d5 = distance_matrix(p5)
    assert gromov_product(d5, 0, 4, 2) == HalfInt(0)
    assert gromov_product(d5, 1, 3, 1) == HalfInt(0)
    d6 = distance_matrix(c6)
    assert gromov_product(d6, 2, 4, 0) == HalfInt.of(1)


def test_gromov_product_accepts_callable(c6: Graph) -> None:
    d6 = distance_matrix(c6)
    assert gromov_product(lambda u, v: int(d6[u, v]), 2, 4, 0) == HalfInt.of(1)


def test_c4_delta_is_one(c4: Graph) -> None:
    report = four_point_delta(c4)
    assert report.delta4 == HalfInt.of(1)
    assert report.witness == (0, 1, 2, 3)
    assert report.tau == 4
    assert not report.approximate
    assert report.display() == "1.0"


def test_c5_delta_is_half() -> None:
    report = four_point_delta(gen.cycle_graph(5))
    assert report.delta4 == HalfInt(1)
    assert str(report.delta4) == "0.5"
    assert report.tau == 2


def test_complete_graph_is_zero_hyperbolic() -> None:
    assert four_point_delta(gen.complete_graph(6)).delta4 == HalfInt(0)


@settings(max_examples=30, deadline=None)
@given(trees(max_n=14))
def test_trees_are_zero_hyperbolic(g: Graph) -> None:
    assert four_point_delta(g).delta4 == HalfInt(0)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.integers(2, 5), st.integers(0, 2**32 - 1))
def test_block_graphs_are_at_most_one_hyperbolic(blocks: int, max_clique: int, seed: int) -> None:
    g = gen.block_graph(blocks, np.random.default_rng(seed), max_clique)
    assert four_point_delta(g).delta4 <= HalfInt.of(1)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=7))
def test_enumeration_matches_brute_force(g: Graph) -> None:
    d = distance_matrix(g)
    best = max(quadruple_delta(d, *q) for q in product(range(g.n), repeat=4))
    report = four_point_delta(g, d)
    assert report.delta4 == best
    assert quadruple_delta(d, *report.witness) == report.delta4
    assert report.tau == 2 * best.doubled


@settings(max_examples=20, deadline=None)
@given(connected_graphs(min_n=4, max_n=16))
def test_workers_agree_on_value_and_witness(g: Graph) -> None:
    assert four_point_delta(g, workers=3) == four_point_delta(g, workers=1)


def test_budget_refusal_advises_sampling(grid: Graph) -> None:
    with pytest.raises(BudgetExceededError, match="sampling mode"):
        four_point_delta(grid, budget=5)
    # corners of the 3x4 grid span a 2x3 rectangle
    assert four_point_delta(grid, budget=5, force=True).delta4 == HalfInt.of(2)


def test_hyperbolicity_samples_above_budget(grid: Graph) -> None:
    exact = four_point_delta(grid)
    sampled = hyperbolicity(grid, budget=5, sample_size=6, rounds=4, seed=11)
    assert sampled.approximate
    assert sampled.display().endswith("*")
    assert sampled.delta4 <= exact.delta4
    assert sampled.evaluated_vertices == 24
    # the witness is expressed in the full graph's ids
    assert quadruple_delta(distance_matrix(grid), *sampled.witness) == sampled.delta4


def test_sampling_with_whole_graph_is_exact(c6: Graph) -> None:
    report = sample_delta(c6, sample_size=6, rounds=3, seed=1)
    assert not report.approximate
    assert report == four_point_delta(c6)
