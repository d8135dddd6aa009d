"""Membership bitmap over all 2^t vectors of F_2^t"""

from functools import lru_cache
from typing import Iterable

import numpy as np
from numpy.typing import NDArray

from sidonlab.config import config
from sidonlab.exceptions import DimMismatch, DimensionTooLarge
from sidonlab.models.vector_model import PointSet


def check_bitmap_dim(dim: int) -> None:
    if dim < 1 or dim > config.MAX_BITMAP_DIM:
        raise DimensionTooLarge(
            f"bitmap operations support 1 <= t <= {config.MAX_BITMAP_DIM}, got t={dim}"
        )


@lru_cache(maxsize=None)
def vector_range(dim: int) -> NDArray[np.int64]:
    """0, 1, ..., 2^dim - 1 (read-only)"""

    values = np.arange(1 << dim, dtype=np.int64)
    values.setflags(write=False)
    return values


@lru_cache(maxsize=None)
def weight_table(dim: int) -> NDArray[np.int64]:
    """Hamming weight of every vector of F_2^dim"""

    weights = np.bitwise_count(vector_range(dim)).astype(np.int64)
    weights.setflags(write=False)
    return weights


class SumBitmap:
    """Set of vectors of F_2^t stored as a boolean array indexed by value"""

    __slots__ = ("dim", "bits")

    def __init__(self, dim: int, bits: NDArray[np.bool_] | None = None):
        check_bitmap_dim(dim)
        self.dim = dim
        if bits is None:
            bits = np.zeros(1 << dim, dtype=np.bool_)
        elif bits.shape != (1 << dim,):
            raise DimMismatch(f"bitmap of length {bits.shape} does not match dim {dim}")
        self.bits = bits

    @classmethod
    def from_values(cls, dim: int, values: Iterable[int]) -> "SumBitmap":
        bitmap = cls(dim)
        indices = np.fromiter((int(v) for v in values), dtype=np.int64)
        if indices.size:
            bitmap.bits[indices] = True
        return bitmap

    @classmethod
    def full(cls, dim: int) -> "SumBitmap":
        return cls(dim, np.ones(1 << dim, dtype=np.bool_))

    @property
    def cardinality(self) -> int:
        return int(np.count_nonzero(self.bits))

    def members(self) -> list[int]:
        return [int(v) for v in np.flatnonzero(self.bits)]

    def to_point_set(self) -> PointSet:
        return PointSet(dim=self.dim, elements=tuple(self.members()))

    def is_empty(self) -> bool:
        return not bool(self.bits.any())

    def is_full(self) -> bool:
        return bool(self.bits.all())

    def complement(self) -> "SumBitmap":
        return SumBitmap(self.dim, ~self.bits)

    def translate(self, g: int) -> "SumBitmap":
        """g + S"""
        return SumBitmap(self.dim, self.bits[vector_range(self.dim) ^ g])

    def _check(self, other: "SumBitmap") -> None:
        if other.dim != self.dim:
            raise DimMismatch(f"bitmaps of dims {self.dim} and {other.dim}")

    def __or__(self, other: "SumBitmap") -> "SumBitmap":
        self._check(other)
        return SumBitmap(self.dim, self.bits | other.bits)

    def __and__(self, other: "SumBitmap") -> "SumBitmap":
        self._check(other)
        return SumBitmap(self.dim, self.bits & other.bits)

    def __sub__(self, other: "SumBitmap") -> "SumBitmap":
        self._check(other)
        return SumBitmap(self.dim, self.bits & ~other.bits)

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, (int, np.integer)):
            return False
        return 0 <= value < self.bits.size and bool(self.bits[value])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SumBitmap):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.dim, self.bits.tobytes()))

    def __len__(self) -> int:
        return self.cardinality

    def __repr__(self) -> str:
        return f"SumBitmap(dim={self.dim}, cardinality={self.cardinality})"
