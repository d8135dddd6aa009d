"""Models for Sidon analysis results"""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from sidonlab.models.code_model import CodeView


class ExtensionClass(str, Enum):
    """Effect of adding g to a sum-free Sidon set"""

    SUM_FREE_SIDON = "SUM_FREE_SIDON"
    SIDON_NOT_SUM_FREE = "SIDON_NOT_SUM_FREE"
    NOT_SIDON = "NOT_SIDON"
    ALREADY_MEMBER = "ALREADY_MEMBER"


class SidonReport(BaseModel):
    """Additive profile of a point set"""

    dim: int = Field(..., description="Ambient dimension t.")
    size: int = Field(..., description="|M|.")
    is_sidon: bool
    is_sum_free: bool
    is_maximal_sidon: bool
    two_star_count: int = Field(..., description="|Sigma2*[M]|.")
    three_sum_count: int = Field(..., description="|Sigma3[M]|.")
    candidate_count: int = Field(..., description="|F_2^t minus Sigma3[M]|.")

    @model_validator(mode="after")
    def check_consistency(self) -> "SidonReport":
        if self.is_maximal_sidon and not (self.is_sidon and self.candidate_count == 0):
            raise ValueError("maximal Sidon report must be Sidon with no candidates")
        if self.is_sidon and self.two_star_count != self.size * (self.size - 1) // 2:
            raise ValueError("Sidon report must have C(|M|,2) distinct 2-star-sums")
        return self


class SetCheck(BaseModel):
    """Everything the check command reports for one set"""

    elements: Tuple[int, ...]
    report: SidonReport
    code: Optional[CodeView] = Field(None, description="Associated code when 0 is not in the set.")
