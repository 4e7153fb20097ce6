"""f4desc configuration: loaded from environment variables and .env file."""

from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

PACKAGE_DIR = Path(__file__).resolve().parent


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=str(PACKAGE_DIR.parent / ".env"),
        env_file_encoding="utf-8",
        env_prefix="F4DESC_",
        extra="ignore",
    )

    # Output
    output_format: Literal["json", "tsv", "table"] = "json"
    schema_version: str = "1"

    # Exchange fixtures
    fixtures_dir: str = str(PACKAGE_DIR / "data" / "fixtures")

    # Randomized property checks (selftest)
    random_seed: int = 20240601
    jacobi_samples: int = 10_000
    generic_samples: int = 100

    # Logging
    log_level: str = "INFO"


settings = Settings()
