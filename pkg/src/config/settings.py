"""Toolkit configuration using Pydantic Settings."""

from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical defaults and runtime options, overridable via SPINPHASE_* variables."""

    model_config = SettingsConfigDict(
        env_prefix="SPINPHASE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging Configuration
    log_level: str = Field(default="INFO", description="Logging level")
    log_to_file: bool = Field(default=False, description="Also write rotated log files")
    log_dir: str = Field(default="logs", description="Directory for log files")

    # Eigensolver Configuration
    eigensolver_tol: float = Field(
        default=1e-10, gt=0.0, description="Residual tolerance ||Hv - Ev|| for ground states"
    )
    eigensolver_max_krylov: int = Field(
        default=200, ge=2, description="Maximum Krylov dimension per Lanczos cycle"
    )
    eigensolver_max_restarts: int = Field(
        default=5, ge=0, description="Restarts allowed before reporting non-convergence"
    )
    seed: int = Field(default=0, ge=0, description="Seed for deterministic start vectors")

    # Quadrature Configuration
    quadrature_tol: float = Field(
        default=1e-10, gt=0.0, description="Absolute tolerance of the adaptive Simpson rule"
    )
    quadrature_max_intervals: int = Field(
        default=1_000_000, ge=1, description="Hard cap on accepted subintervals"
    )

    # Berry Loop Configuration
    loop_min_overlap: float = Field(
        default=0.1, gt=0.0, lt=1.0, description="Smallest consecutive overlap in a loop"
    )
    gap_threshold: float = Field(
        default=1e-8, gt=0.0, description="Spectral gap below which a loop is degenerate"
    )

    # Adiabatic Evolution Configuration
    adiabatic_steps: int = Field(
        default=100_000, ge=100, description="Time steps per drive period"
    )

    # Sweep Configuration
    jobs: int = Field(default=1, ge=1, description="Worker processes for parameter sweeps")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        allowed_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        v_upper = v.upper()
        if v_upper not in allowed_levels:
            raise ValueError(f"log_level must be one of {allowed_levels}")
        return v_upper


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
