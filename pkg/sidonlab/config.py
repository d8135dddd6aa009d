"""Settings loaded from environment variables and .env"""

import logging
import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


_LEVELS = {name: logging.getLevelName(name) for name in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")}


class Settings(BaseSettings):
    """sidonlab settings, read from the environment and .env"""

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=False, extra="ignore"
    )

    # Enumerator Configuration
    ENUMERATOR_TYPE: Literal["serial", "mpire"] = "mpire"
    SIDON_WORKERS: Optional[int] = None  # None or <= 0 means all available cores
    ENUM_SPLIT_DEPTH: int = 2

    # Dimension Limits
    MAX_BITMAP_DIM: int = 28  # 2^28 membership entries per bitmap
    MAX_FULL_ENUM_DIM: int = 8
    MAX_SMAX_DIM: int = 7
    MAX_EQUIVALENCE_DIM: int = 6
    XOR_TABLE_MAX_DIM: int = 10

    # Code Analysis Configuration
    COVERING_RADIUS_CAP: int = 5
    EXACT_DISTANCE_MAX_LENGTH: int = 20

    # Verify Suite Configuration
    VERIFY_RANDOM_SETS: int = 1000
    VERIFY_SEED: int = 20240617

    # Logging Configuration
    LOG_LEVEL: int = logging.INFO  # Can be set via env as: DEBUG, INFO, WARNING, ERROR, CRITICAL
    LOG_DIR: Path = Path.cwd() / "logs"
    LOG_FILENAME: str = "sidonlab.log"
    LOG_TO_FILE: bool = True

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def parse_log_level(cls, v):
        """Accept level names or numbers; unknown names mean INFO"""

        if isinstance(v, int):
            return v
        name = str(v).strip().upper()
        if name.isdigit():
            return int(name)
        return _LEVELS.get(name, logging.INFO)

    @field_validator("ENUM_SPLIT_DEPTH")
    @classmethod
    def check_split_depth(cls, v: int) -> int:
        """Subtasks are cut at depth 1 or 2"""

        if v not in (1, 2):
            raise ValueError("ENUM_SPLIT_DEPTH must be 1 or 2")
        return v

    @field_validator("LOG_DIR")
    @classmethod
    def create_log_dir(cls, v: Path) -> Path:
        """Ensure log directory exists"""

        v.mkdir(parents=True, exist_ok=True)
        return v

    def resolved_workers(self, requested: Optional[int] = None) -> int:
        """Number of enumeration workers, falling back to SIDON_WORKERS then the core count"""

        for value in (requested, self.SIDON_WORKERS):
            if value is not None and value > 0:
                return value
        return os.cpu_count() or 1

    def to_dict(self) -> dict:
        """Convert settings to dictionary"""

        return self.model_dump()


config = Settings()
