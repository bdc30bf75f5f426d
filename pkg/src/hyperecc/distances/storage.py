"""Packed lower-triangle storage for symmetric 16-bit distance tables.

Pair (i, j) with i > j lives at index i·(i−1)/2 + j, so the flat array is the
row-major lower triangle without the diagonal.

Binary dump layout: ``b"HECD"``, format version (u8), n (u32 LE), then the
n·(n−1)/2 entries as u16 LE.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

import numpy as np
import numpy.typing as npt

MAGIC = b"HECD"
FORMAT_VERSION = 1
MAX_VALUE = np.iinfo(np.uint16).max
_HEADER = struct.Struct("<4sBI")


@dataclass(frozen=True, eq=False)
class TriangularMatrix:
    n: int
    data: npt.NDArray[np.uint16]

    @classmethod
    def zeros(cls, n: int) -> TriangularMatrix:
        return cls(n, np.zeros(n * (n - 1) // 2, dtype=np.uint16))

    @classmethod
    def from_dense(cls, dense: npt.ArrayLike) -> TriangularMatrix:
        arr = np.asarray(dense)
        rows, cols = np.tril_indices(len(arr), k=-1)
        values = arr[rows, cols]
        if len(values) and (values.min() < 0 or values.max() > MAX_VALUE):
            raise ValueError("entries must fit in 16 bits")
        return cls(len(arr), values.astype(np.uint16))

    @staticmethod
    def index(i: int, j: int) -> int:
        if i < j:
            i, j = j, i
        return i * (i - 1) // 2 + j

    def get(self, i: int, j: int) -> int:
        return 0 if i == j else int(self.data[self.index(i, j)])

    def set(self, i: int, j: int, value: int) -> None:
        if i == j:
            raise ValueError("the diagonal is fixed at 0")
        self.data[self.index(i, j)] = value

    def assign_row(self, x: int, targets: npt.ArrayLike, values: npt.ArrayLike) -> None:
        """Write d̂(x, t) for every t in ``targets`` at once."""
        t = np.asarray(targets, dtype=np.int64)
        if not len(t):
            return
        v = np.asarray(values, dtype=np.int64)
        if v.max() > MAX_VALUE or v.min() < 0:
            raise ValueError("estimate does not fit in 16 bits")
        hi = np.maximum(t, x)
        lo = np.minimum(t, x)
        self.data[hi * (hi - 1) // 2 + lo] = v.astype(np.uint16)

    def to_dense(self) -> npt.NDArray[np.int32]:
        out = np.zeros((self.n, self.n), dtype=np.int32)
        rows, cols = np.tril_indices(self.n, k=-1)
        out[rows, cols] = self.data
        out[cols, rows] = self.data
        return out

    def dump(self, fh: BinaryIO) -> None:
        fh.write(_HEADER.pack(MAGIC, FORMAT_VERSION, self.n))
        fh.write(self.data.astype("<u2").tobytes())

    def save(self, path: str | Path) -> None:
        with Path(path).open("wb") as fh:
            self.dump(fh)

    @classmethod
    def load(cls, fh: BinaryIO) -> TriangularMatrix:
        header = fh.read(_HEADER.size)
        if len(header) != _HEADER.size:
            raise ValueError("truncated header")
        magic, version, n = _HEADER.unpack(header)
        if magic != MAGIC:
            raise ValueError(f"bad magic {magic!r}")
        if version != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {version}")
        count = n * (n - 1) // 2
        payload = fh.read(2 * count)
        if len(payload) != 2 * count:
            raise ValueError(f"expected {count} entries, file is truncated")
        return cls(n, np.frombuffer(payload, dtype="<u2").astype(np.uint16))

    @classmethod
    def read(cls, path: str | Path) -> TriangularMatrix:
        with Path(path).open("rb") as fh:
            return cls.load(fh)
