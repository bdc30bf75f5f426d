"""Pluggable distance estimators with a declared (α, β) guarantee.

An estimator promises d(x,y) <= d̃(x,y) <= α·d(x,y) + β, d̃(x,x) = 0 and
symmetry. The estimated sweep only ever asks "is d̃(u, v) <= threshold".
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Protocol

import numpy as np

from hyperecc.errors import EstimatorContractError
from hyperecc.oracle import DistanceMatrix


class Proximity(Protocol):
    def within(self, u: int, v: int, threshold: int) -> bool: ...


class DistanceEstimator(ABC):
    alpha: int
    beta: int

    @abstractmethod
    def query(self, x: int, y: int) -> int:
        """d̃(x, y)."""

    def within(self, u: int, v: int, threshold: int) -> bool:
        return self.query(u, v) <= threshold

    def __repr__(self) -> str:
        return f"{type(self).__name__}(alpha={self.alpha}, beta={self.beta})"


class ExactEstimator(DistanceEstimator):
    """All-pairs distances served as a (1, 0) estimator."""

    alpha = 1
    beta = 0

    def __init__(self, distances: DistanceMatrix) -> None:
        self._d = distances

    def query(self, x: int, y: int) -> int:
        return int(self._d[x, y])


class StretchedEstimator(DistanceEstimator):
    """Worst case of the (2, 1) contract: d̃ = 2d + 1 off the diagonal."""

    alpha = 2
    beta = 1

    def __init__(self, distances: DistanceMatrix) -> None:
        self._d = distances

    def query(self, x: int, y: int) -> int:
        return 0 if x == y else 2 * int(self._d[x, y]) + 1


class CheckedEstimator(DistanceEstimator):
    """Wraps an estimator and verifies every answer against exact distances."""

    def __init__(self, inner: DistanceEstimator, distances: DistanceMatrix) -> None:
        self.inner = inner
        self.alpha = inner.alpha
        self.beta = inner.beta
        self._d = distances
        self.checked = 0

    def query(self, x: int, y: int) -> int:
        value = self.inner.query(x, y)
        d = int(self._d[x, y])
        self.checked += 1
        if not d <= value <= self.alpha * d + self.beta:
            raise EstimatorContractError(
                f"{self.inner!r} answered {value} for ({x}, {y}) at distance {d}"
            )
        if self.inner.query(y, x) != value:
            raise EstimatorContractError(f"{self.inner!r} is not symmetric on ({x}, {y})")
        return value


class MatrixProximity:
    """Exact "d(u, v) <= threshold" answered from a dense distance matrix."""

    def __init__(self, distances: DistanceMatrix) -> None:
        self._d = np.asarray(distances)

    def within(self, u: int, v: int, threshold: int) -> bool:
        return int(self._d[u, v]) <= threshold

    def distance(self, u: int, v: int) -> int:
        return int(self._d[u, v])


def declared_threshold(estimator: DistanceEstimator, rho: int) -> int:
    """α·ρ + β: the largest d̃ a pair at distance ρ may report."""
    return estimator.alpha * rho + estimator.beta
