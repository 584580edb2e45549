"""Configuration management for cadlag-audit."""
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Tuple


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # Reproducibility
    cadlag_seed: int = 20190102  # CADLAG_SEED overrides

    # Audit tolerances
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    breakpoint_eps: float = 1e-15  # closer breakpoints are rejected

    # Oracle configuration
    sup_grid: int = 2048
    integral_grid: int = 512
    quadrature_order: int = 2  # Gauss-Legendre nodes per cell and axis
    sup_oracle_gap: float = 0.01  # 1% below exact
    integral_oracle_gap: float = 1e-3  # 0.1% relative

    # Corpus generation
    corpus_count: int = 1000
    corpus_min_jumps: int = 0
    corpus_max_jumps: int = 12
    corpus_min_gap: float = 0.01
    corpus_dim: int = 1

    # Audit sweep
    audit_windows_per_path: int = 50
    mu_grid: Tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    p_grid: Tuple[float, ...] = (1.5, 2.0, 4.0)
    chain_delta: float = 0.5
    chain_sweep_points: int = 8
    lemma_f2_window_delta: bool = False  # read Delta(f;(sigma,t,tau)) as a window sup
    constants_path: str = "constants/derived_constants.json"

    # Monte Carlo
    mc_confidence: float = 0.99
    mc_workers: int = 1
    trend_alpha: float = 0.01
    trend_max_ratio: float = 3.0

    # Logging
    log_file: str = "cadlag_audit.log"
    log_level: str = "INFO"

    @property
    def tolerances(self) -> Tuple[float, float]:
        """(relative, absolute) comparison tolerance."""
        return self.rel_tol, self.abs_tol


# Global settings instance
settings = Settings()
