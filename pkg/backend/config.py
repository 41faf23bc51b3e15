"""
Configuration settings for revolve
Uses Pydantic settings so defaults can be overridden from a .env file
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical defaults and logging settings. CLI flags take precedence."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="REVOLVE_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application settings
    APP_NAME: str = "revolve"
    APP_VERSION: str = "0.1.0"
    DEBUG: bool = Field(default=False, description="Enable debug logging")

    # Quadrature settings
    REL_TOL: float = Field(default=1e-10, gt=0, description="Relative tolerance for adaptive quadrature")
    ABS_TOL: float = Field(default=1e-12, gt=0, description="Absolute tolerance for adaptive quadrature")
    MAX_DEPTH: int = Field(
        default=60,
        ge=1,
        description="Deepest bisection level an integration interval may reach",
    )
    MAX_INTERVALS: int = Field(
        default=5000,
        ge=1,
        description="Upper bound on live subintervals per integral",
    )

    # Crossing detection
    SIGN_CHANGE_GRID: int = Field(
        default=1024,
        ge=2,
        description="Grid size used to scan for sign changes of Ax + By - C along the curve",
    )
    BISECTION_TOL: float = Field(
        default=1e-13,
        gt=0,
        description="Bracket width for crossing refinement, scaled by (1 + |a| + |b|)",
    )

    # Segment integration
    PARALLEL_SEGMENTS: bool = Field(
        default=False,
        description="Integrate the smooth segments on a thread pool",
    )
    MAX_WORKERS: int = Field(default=4, ge=1, description="Thread pool size for segment integration")

    # Mesh settings
    DEFAULT_RINGS: int = Field(default=256, ge=2, description="Samples along t")
    DEFAULT_SEGMENTS: int = Field(default=256, ge=3, description="Samples around the revolution")
    MESH_AREA_CHUNK: int = Field(
        default=1_000_000,
        ge=1,
        description="Triangles processed per block when summing mesh area",
    )

    # Table and check settings
    TABLE_SAMPLES: int = Field(default=101, ge=2, description="Default row count for the table command")
    CHECK_MIN_ALLOWANCE: float = Field(
        default=0.002,
        gt=0,
        description="Smallest relative difference tolerated between quadrature and mesh areas",
    )

    # Logging settings
    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")
    LOG_FORMAT: str = Field(default="%(message)s", description="Log format string")


# Create global settings instance
settings = Settings()
