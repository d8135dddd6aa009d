"""Models for the maximal Sidon set enumeration"""

from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from sidonlab.models.vector_model import PointSet


class WeightClass(str, Enum):
    """Dimension-8 subtasks by the maximal weight of an element"""

    W4 = "W4"
    W5 = "W5"
    W6 = "W6"
    W7 = "W7"
    W8 = "W8"


class Family(str, Enum):
    """Which maximal sets are enumerated"""

    SIDON = "sidon"
    SUM_FREE_SIDON = "sum_free_sidon"


class EnumTask(BaseModel):
    """Independent subtree of the extension search"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    dim: int
    family: Family = Family.SIDON
    base: PointSet = Field(..., description="Normalization prefix every result contains.")
    weight_class: Optional[WeightClass] = None
    prefix: Tuple[int, ...] = Field(..., description="Current partial set, base included, ascending.")
    last: int = Field(-1, description="Last added element; children only use larger values.")
    allowed: np.ndarray = Field(..., description="Weight filter over F_2^t.")
    members: np.ndarray
    sum2: np.ndarray = Field(..., description="Sigma2 of prefix.")
    sum3: np.ndarray = Field(..., description="Sigma3 of prefix.")

    @property
    def blocked(self) -> np.ndarray:
        if self.family is Family.SUM_FREE_SIDON:
            return self.sum3 | self.sum2
        return self.sum3

    @property
    def candidate_mask(self) -> np.ndarray:
        mask = ~self.blocked & self.allowed
        mask[: self.last + 1] = False
        return mask


class TaskOutcome(BaseModel):
    """Partial result of one subtree"""

    size_histogram: Dict[int, int] = Field(default_factory=dict)
    examples_per_size: Dict[int, Tuple[int, ...]] = Field(default_factory=dict)
    nodes_visited: int = 0
    witnesses: List[Tuple[int, ...]] = Field(default_factory=list)


class EnumResult(BaseModel):
    """Merged enumeration result"""

    dim: int
    family: Family = Family.SIDON
    weight_class: Optional[WeightClass] = None
    size_histogram: Dict[int, int] = Field(..., description="size -> number of maximal sets.")
    examples_per_size: Dict[int, Tuple[int, ...]] = Field(
        default_factory=dict, description="Lexicographically smallest witness per size."
    )
    nodes_visited: int
    tasks: int = Field(..., description="Number of subtrees dispatched.")
    wall_time: float = Field(..., description="Seconds.")
    witnesses: Optional[List[Tuple[int, ...]]] = Field(
        default=None, exclude=True, description="Every maximal set, in search order."
    )

    @property
    def max_size(self) -> int:
        return max(self.size_histogram) if self.size_histogram else 0

    @property
    def total(self) -> int:
        return sum(self.size_histogram.values())
