from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    LOGGER_NAME: str = "app"
    LOGGER_PATH: Optional[str] = None
    LOG_LEVEL: str = "WARNING"

    # Algebra limits
    CLOSURE_CAP: int = 10_000
    DEFAULT_DMAX: int = 60
    HILBERT_DMAX: int = 40
    INT_MAGNITUDE_CAP: Optional[int] = None
    CATALOG_FIELD_DEGREE_CAP: int = 8

    # Reproducibility
    DEFAULT_SEED: int = 0

    # Metrics
    METRICS_FILE: Optional[str] = None

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")


settings = Settings()
