"""Small value records shared across the analysis subpackages.

Array-heavy results (layerings, trees, distance tables) are frozen dataclasses
next to the code that builds them; the records here are the scalar summaries
that travel into report tables and verify output.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TreeVariant(StrEnum):
    T1 = "T1"  # rooted at the middle of a mutually distant pair's geodesic
    T2 = "T2"  # rooted rad(G) along the geodesic from a furthest vertex
    T3 = "T3"  # rooted at the lowest-id central vertex


class EccStrategy(StrEnum):
    LINEAR = "linear"
    REFINED = "refined"


class SweepMode(StrEnum):
    EXACT_POWER = "exact-power"
    ESTIMATOR = "estimator"


@dataclass(frozen=True, order=True, slots=True)
class HalfInt:
    """Exact half-integer, stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, value: int) -> HalfInt:
        return cls(2 * value)

    def __add__(self, other: HalfInt | int) -> HalfInt:
        if isinstance(other, int):
            return HalfInt(self.doubled + 2 * other)
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        if isinstance(other, int):
            return HalfInt(self.doubled - 2 * other)
        return HalfInt(self.doubled - other.doubled)

    def __mul__(self, factor: int) -> HalfInt:
        return HalfInt(self.doubled * factor)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self.doubled / 2

    @property
    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def to_int(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def ceil(self) -> int:
        return -(-self.doubled // 2)

    def __str__(self) -> str:
        return f"{self.doubled / 2:.1f}"


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True)


class MutualPair(_Record):
    u: int
    v: int
    distance: int
    scans: int
    trace: tuple[int, ...]  # v1, v2, ... furthest vertices in generation order
    trace_distances: tuple[int, ...]  # d(v0, v1), d(v1, v2), ...

    @model_validator(mode="after")
    def _trace_matches_scans(self) -> MutualPair:
        if len(self.trace) != self.scans or len(self.trace_distances) != self.scans:
            raise ValueError("trace length must equal the number of scans")
        return self


class GeodesicPath(_Record):
    vertices: tuple[int, ...] = Field(min_length=1)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def at(self, i: int) -> int:
        return self.vertices[i]


class HyperbolicityReport(_Record):
    delta4: HalfInt
    witness: tuple[int, int, int, int]
    approximate: bool = False  # sampled lower bound instead of the exact maximum
    evaluated_vertices: int = 0

    @property
    def thinness_bound(self) -> HalfInt:
        return self.delta4 * 4

    @property
    def tau(self) -> int:
        """4·δ₄, always an integer."""
        return self.thinness_bound.to_int()

    def display(self) -> str:
        return f"{self.delta4}*" if self.approximate else str(self.delta4)


class DistanceStats(_Record):
    delta_max: int
    delta_min: int
    delta_avg: float
    pairs: int
    worst_pair: tuple[int, int]
    sampled: bool = False


class Violation(_Record):
    check: str
    graph: str
    detail: str
    witness: tuple[int, ...] = ()

    def describe(self) -> str:
        where = f" at {list(self.witness)}" if self.witness else ""
        return f"[{self.graph}] {self.check}{where}: {self.detail}"
