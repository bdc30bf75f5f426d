"""Tests for the shared value records and the half-integer type."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from hyperecc.errors import BudgetExceededError, GraphParseError
from hyperecc.models import (
    GeodesicPath,
    HalfInt,
    HyperbolicityReport,
    MutualPair,
    Violation,
)


def test_halfint_arithmetic() -> None:
    half = HalfInt(1)
    assert str(half) == "0.5"
    assert float(half) == 0.5
    assert half + half == HalfInt.of(1)
    assert half + 1 == HalfInt(3)
    assert HalfInt.of(2) - half == HalfInt(3)
    assert half * 4 == HalfInt.of(2)
    assert 4 * half == HalfInt.of(2)
    assert HalfInt(3).ceil() == 2
    assert HalfInt(-3).ceil() == -1
    assert HalfInt(1) < HalfInt(2)


def test_halfint_to_int() -> None:
    assert HalfInt.of(3).to_int() == 3
    assert HalfInt.of(3).is_integral
    with pytest.raises(ValueError, match="not an integer"):
        HalfInt(5).to_int()


def test_hyperbolicity_report_tau_and_display() -> None:
    report = HyperbolicityReport(delta4=HalfInt(3), witness=(0, 1, 2, 3))
    assert report.tau == 6
    assert report.thinness_bound == HalfInt.of(6)
    assert report.display() == "1.5"
    sampled = report.model_copy(update={"approximate": True})
    assert sampled.display() == "1.5*"


def test_mutual_pair_trace_must_match_scans() -> None:
    pair = MutualPair(u=0, v=3, distance=3, scans=2, trace=(3, 0), trace_distances=(3, 3))
    assert pair.scans == 2
    with pytest.raises(ValidationError):
        MutualPair(u=0, v=3, distance=3, scans=3, trace=(3, 0), trace_distances=(3, 3))


def test_geodesic_path() -> None:
    path = GeodesicPath(vertices=(4, 3, 2))
    assert path.length == 2
    assert (path.start, path.end, path.at(1)) == (4, 2, 3)
    with pytest.raises(ValidationError):
        GeodesicPath(vertices=())


def test_violation_describe() -> None:
    v = Violation(check="d <= dhat", graph="cycle:6", detail="dhat=1 d=2", witness=(4, 3))
    assert v.describe() == "[cycle:6] d <= dhat at [4, 3]: dhat=1 d=2"
    assert Violation(check="c", graph="g", detail="x").describe() == "[g] c: x"


def test_error_messages() -> None:
    assert str(GraphParseError("bad", line=7)) == "line 7: bad"
    assert str(GraphParseError("no edges")) == "no edges"
    err = BudgetExceededError("all-pairs distances", 12_000, 5_000, hint="pass --force")
    assert str(err) == "all-pairs distances needs 12,000 but the budget is 5,000; pass --force"
    assert (err.needed, err.budget) == (12_000, 5_000)
