"""Layer 1: Settings - Configuration management."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .constants import DEFAULT_DIMENSION, MAX_DIMENSION


class AppSettings(BaseModel):
    """Application settings."""
    name: str = "grassmann"
    version: str = "0.1.0"


class AlgebraSettings(BaseModel):
    """Dimension defaults for frames built by the CLI."""
    default_dimension: int = Field(default=DEFAULT_DIMENSION, ge=1, le=MAX_DIMENSION)
    max_dimension: int = Field(default=MAX_DIMENSION, ge=1, le=MAX_DIMENSION)


class CliSettings(BaseModel):
    """Command-line output configuration."""
    approx_digits: Optional[int] = Field(default=None, ge=1, le=100)


class ObservabilitySettings(BaseModel):
    """Observability configuration."""
    log_level: str = "WARNING"
    structured_logging: bool = False
    log_file: Optional[Path] = None


class Settings(BaseSettings):
    """Main settings class aggregating all configuration."""

    model_config = SettingsConfigDict(
        env_prefix="GRASSMANN_",
        env_file=".env",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )

    app: AppSettings = Field(default_factory=AppSettings)
    algebra: AlgebraSettings = Field(default_factory=AlgebraSettings)
    cli: CliSettings = Field(default_factory=CliSettings)
    observability: ObservabilitySettings = Field(default_factory=ObservabilitySettings)

    project_root: Path = Path(__file__).parent.parent.parent


# Load settings from environment
settings = Settings()
