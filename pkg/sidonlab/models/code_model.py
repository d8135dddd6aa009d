"""Models for associated codes"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class DistanceClass(str, Enum):
    """Minimum distance, resolved only as far as 3, 4, 5 or more"""

    D3 = "D3"
    D4 = "D4"
    D5 = "D5"
    D6_OR_MORE = "D6_OR_MORE"

    @property
    def lower_bound(self) -> int:
        return {"D3": 3, "D4": 4, "D5": 5, "D6_OR_MORE": 6}[self.value]


class SubdiagonalDistance(str, Enum):
    """dmax(n, n - t)"""

    D3 = "3"
    D4 = "4"
    D5 = "5"
    GE6 = "GE6"


class CodeView(BaseModel):
    """Binary linear code whose check matrix has the given columns"""

    n: int = Field(..., description="Length, the number of columns.")
    t: int = Field(..., description="Rows of the check matrix.")
    k: int = Field(..., description="Dimension n - rank.")
    columns: Tuple[int, ...] = Field(..., description="Check matrix columns in order.")
    d_class: DistanceClass
    covering_radius: Optional[int] = None

    @model_validator(mode="after")
    def check_shape(self) -> "CodeView":
        if len(self.columns) != self.n:
            raise ValueError("n must equal the number of columns")
        if not 0 <= self.k <= self.n:
            raise ValueError("k must lie in 0..n")
        return self

    @property
    def full_rank(self) -> bool:
        return self.n - self.k == self.t

    def to_record(self) -> dict:
        """{n, k, d_class, R?} plus the column list"""

        record = {"n": self.n, "k": self.k, "d_class": self.d_class.value}
        if self.covering_radius is not None:
            record["R"] = self.covering_radius
        record["columns"] = list(self.columns)
        return record

    def check_matrix_rows(self) -> List[str]:
        """t rows of n characters, row i holds coordinate i of every column"""

        return [
            "".join("1" if column >> row & 1 else "0" for column in self.columns)
            for row in range(self.t)
        ]


class SubdiagonalClass(BaseModel):
    n: int
    t: int
    d_class: SubdiagonalDistance
