"""Models for vectors, point sets and maps over F_2^t"""

from typing import Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sidonlab.exceptions import DimMismatch, ValidationError


class GF2Vector(BaseModel):
    """Element of F_2^t, bit i of value is coordinate i+1"""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0, description="Bit-packed coordinates.")
    dim: int = Field(..., ge=1, description="Ambient dimension t.")

    @model_validator(mode="after")
    def check_range(self) -> "GF2Vector":
        if self.value >= 1 << self.dim:
            raise ValueError(f"value {self.value} does not fit in dimension {self.dim}")
        return self

    @classmethod
    def basis(cls, dim: int, i: int) -> "GF2Vector":
        """Standard basis vector e_i, i in 1..dim"""
        if not 1 <= i <= dim:
            raise ValidationError(f"basis index {i} outside 1..{dim}")
        return cls(value=1 << (i - 1), dim=dim)

    def __add__(self, other: "GF2Vector") -> "GF2Vector":
        if other.dim != self.dim:
            raise DimMismatch(f"cannot add vectors of dims {self.dim} and {other.dim}")
        return GF2Vector(value=self.value ^ other.value, dim=self.dim)

    def __int__(self) -> int:
        return self.value


class PointSet(BaseModel):
    """Finite subset M of F_2^t, elements strictly ascending"""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=1, description="Ambient dimension t.")
    elements: Tuple[int, ...] = Field(default=(), description="Sorted element values.")

    @model_validator(mode="after")
    def check_elements(self) -> "PointSet":
        limit = 1 << self.dim
        previous = -1
        for value in self.elements:
            if value <= previous:
                raise ValueError("elements must be strictly ascending")
            if value >= limit:
                raise ValueError(f"element {value} does not fit in dimension {self.dim}")
            previous = value
        return self

    @classmethod
    def of(cls, dim: int, values: Iterable[int]) -> "PointSet":
        """Build from unsorted values, rejecting duplicates and out-of-range entries"""

        items = [int(v) for v in values]
        limit = 1 << dim
        seen: set[int] = set()
        for value in items:
            if value < 0 or value >= limit:
                raise ValidationError(f"element {value} is not a vector of F_2^{dim}")
            if value in seen:
                raise ValidationError(f"duplicate element {value}")
            seen.add(value)
        return cls(dim=dim, elements=tuple(sorted(items)))

    @classmethod
    def standard_base(cls, dim: int, with_zero: bool = True) -> "PointSet":
        """{0, e_1, ..., e_t} or {e_1, ..., e_t}"""

        values = [1 << i for i in range(dim)]
        if with_zero:
            values.append(0)
        return cls.of(dim, values)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, value: object) -> bool:
        if isinstance(value, GF2Vector):
            value = value.value
        return value in self.elements

    def union(self, values: Iterable[int]) -> "PointSet":
        return PointSet.of(self.dim, set(self.elements).union(int(v) for v in values))

    def without(self, value: int) -> "PointSet":
        return PointSet(dim=self.dim, elements=tuple(v for v in self.elements if v != value))

    def vectors(self) -> list[GF2Vector]:
        return [GF2Vector(value=v, dim=self.dim) for v in self.elements]

    def to_literal(self) -> str:
        """Comma-separated decimals, the witness-file format"""
        return ",".join(str(v) for v in self.elements)


class LinearMap(BaseModel):
    """Linear map of F_2^t given by the images of e_1..e_t"""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=1)
    columns: Tuple[int, ...] = Field(..., description="Column i is the image of e_(i+1).")

    @model_validator(mode="after")
    def check_columns(self) -> "LinearMap":
        if len(self.columns) != self.dim:
            raise ValueError(f"expected {self.dim} columns, got {len(self.columns)}")
        limit = 1 << self.dim
        if any(c < 0 or c >= limit for c in self.columns):
            raise ValueError("column out of range")
        return self

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls(dim=dim, columns=tuple(1 << i for i in range(dim)))

    def apply(self, value: int) -> int:
        image = 0
        index = 0
        while value:
            if value & 1:
                image ^= self.columns[index]
            value >>= 1
            index += 1
        return image


class AffineMap(BaseModel):
    """Affine map T = L + a"""

    model_config = ConfigDict(frozen=True)

    linear: LinearMap
    translation: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def check_translation(self) -> "AffineMap":
        if self.translation >= 1 << self.linear.dim:
            raise ValueError("translation out of range")
        return self

    @property
    def dim(self) -> int:
        return self.linear.dim

    def apply(self, value: int) -> int:
        return self.linear.apply(value) ^ self.translation
