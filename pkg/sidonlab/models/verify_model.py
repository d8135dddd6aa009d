"""Models for the reproduction suite"""

from enum import Enum

from pydantic import BaseModel, Field


class VerifyLevel(str, Enum):
    FAST = "fast"
    FULL = "full"


class VerifyStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class VerifyOutcome(BaseModel):
    """Result of one reproduction check"""

    check_name: str
    status: VerifyStatus
    expected: str = ""
    actual: str = ""
    seconds: float = Field(0.0, description="Wall time of the check.")
