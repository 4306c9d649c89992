"""
Configuration settings for the Higman-Thompson toolkit
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings"""

    model_config = SettingsConfigDict(
        env_prefix="HTG_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Logging
    log_level: str = Field(default="WARNING")
    log_format: Literal["console", "json"] = Field(default="console")

    # Verification harness
    verify_trials: int = Field(default=200, ge=0)
    verify_seed: int = Field(default=42)
    verify_workers: int = Field(default=1, ge=1)
    random_max_leaves: int = Field(default=13, ge=1)
    pfix_extra_depth: int = Field(default=3, ge=0)


@lru_cache
def get_settings() -> Settings:
    """Settings read once from the environment and `.env`"""
    return Settings()
