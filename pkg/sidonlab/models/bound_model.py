"""Models for the Sidon size bounds"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class EpsilonClass(str, Enum):
    """Where epsilon falls among the thresholds its case consults"""

    NOT_CONSULTED = "NOT_CONSULTED"
    AT_MOST_FIRST = "AT_MOST_FIRST"
    BETWEEN = "BETWEEN"
    ABOVE_ALL = "ABOVE_ALL"


class ProofCase(str, Enum):
    """Parity of a and value of b for n - 2 = 3a + b"""

    ODD_B0 = "ODD_B0"
    ODD_B1 = "ODD_B1"
    ODD_B2 = "ODD_B2"
    EVEN_B0 = "EVEN_B0"
    EVEN_B1 = "EVEN_B1"
    EVEN_B2 = "EVEN_B2"

    @classmethod
    def of(cls, a: int, b: int) -> "ProofCase":
        return cls(f"{'ODD' if a % 2 else 'EVEN'}_B{b}")


class LambdaBreakdown(BaseModel):
    """Decomposition of the even-t bound"""

    t: int = Field(..., description="Even dimension, at least 6.")
    F: int = Field(..., description="Nearest integer to sqrt(2^(t+1)).")
    a: int = Field(..., ge=0)
    b: int = Field(..., ge=0, le=2)
    eps_class: EpsilonClass
    eps_comparisons: Dict[str, bool] = Field(
        default_factory=dict, description="Threshold comparisons in the order they were decided."
    )
    lam: int = Field(..., ge=0, le=2, description="Offset lambda.")
    n_t: int

    @model_validator(mode="after")
    def check_decomposition(self) -> "LambdaBreakdown":
        if self.F - 4 != 3 * self.a + self.b:
            raise ValueError("F - 4 must equal 3a + b")
        if self.n_t != self.F - self.lam:
            raise ValueError("n_t must equal F - lambda")
        return self


class BoundRow(BaseModel):
    """One t of the bounds table"""

    t: int
    trivial: int
    new_bound: Optional[int] = None
    bt93: Optional[int] = None
    F: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    lam: Optional[int] = None

    @model_validator(mode="after")
    def check_order(self) -> "BoundRow":
        if self.new_bound is not None and self.new_bound > self.trivial:
            raise ValueError("new bound cannot exceed the trivial bound")
        return self


class ProofStep(BaseModel):
    """One length tried while replaying the case chain"""

    n: int
    case_id: ProofCase
    two_s_lower_bound: str = Field(..., description="Exact rational lower bound on 2s.")
    holds: bool = Field(..., description="Whether the bound exceeds 2^(t+1).")


class ProofCheckReport(BaseModel):
    t: int
    case_id: ProofCase
    n_used: int
    inequality_holds: bool
    target: str = Field(..., description="2^(t+1)")
    steps: List[ProofStep] = Field(default_factory=list)


class Cor19Row(BaseModel):
    """Parameters of a nonexistent [n, k, 5] code for even t"""

    t: int
    F: int
    a: int
    b: int
    eps_decimal: str
    lam: int
    n: int
    k: int
