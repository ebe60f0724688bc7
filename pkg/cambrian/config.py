import logging
from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Run settings loaded from CAMBRIAN_* environment variables."""

    # Core
    LOG_LEVEL: str = "INFO"

    # Enumeration bounds
    NODE_CAP: int = 100000
    MAX_LEN: int = 8
    DEPTH: int = 7
    HEIGHT_BOUND: int = 30

    # Iteration guards
    LENGTH_CAP: int = 10000  # greedy descent steps
    TITS_REDUCTION_CAP: int = 500  # reflections spent moving a weight into D

    # Output
    OUTPUT_DIR: str = ""

    class Config:
        env_prefix = "CAMBRIAN_"
        env_file = ".env"
        extra = "ignore"

    @property
    def output_path(self) -> Path | None:
        if not self.OUTPUT_DIR:
            return None
        return Path(self.OUTPUT_DIR)

    def require_positive_bounds(self) -> None:
        """Raise if any enumeration bound is unusable."""
        for name in ("NODE_CAP", "HEIGHT_BOUND", "LENGTH_CAP", "TITS_REDUCTION_CAP"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        for name in ("MAX_LEN", "DEPTH"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


def _create_settings() -> Settings:
    settings = Settings()
    settings.require_positive_bounds()
    logger.debug(
        f"Settings: node cap {settings.NODE_CAP}, maxLen {settings.MAX_LEN}, depth {settings.DEPTH}"
    )
    return settings


@lru_cache
def get_settings() -> Settings:
    """Get cached settings."""
    return _create_settings()
