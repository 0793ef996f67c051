"""
Configuration management for the EPR quantum games engine.
"""

import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class ToleranceConfig:
    """Numerical tolerances used across the engine."""
    algebra: float = 1e-12
    probability: float = 1e-12
    oracle: float = 1e-10
    equilibrium: float = 1e-10


@dataclass
class SweepConfig:
    """Configuration for entanglement sweeps."""
    grid_points: int = 101
    max_workers: int = 4
    enable_parallel_processing: bool = True


@dataclass
class VerifyConfig:
    """Defaults for the cross-formalism verification run."""
    samples: int = 1000
    seed: int = 0
    tolerance: float = 1e-10


@dataclass
class AppConfig:
    """Main application configuration."""
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)

    debug_mode: bool = False
    log_level: str = "INFO"
    output_precision: int = 12

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.log_level not in _LOG_LEVELS:
            raise ValueError(f"LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}, got {self.log_level!r}")
        if self.output_precision < 1:
            raise ValueError("OUTPUT_PRECISION must be at least 1")
        for name, value in vars(self.tolerances).items():
            if value < 0:
                raise ValueError(f"{name.upper()}_TOLERANCE must be non-negative")
        if self.sweep.grid_points < 2:
            raise ValueError("SWEEP_GRID_POINTS must be at least 2")
        if self.sweep.max_workers < 1:
            raise ValueError("SWEEP_MAX_WORKERS must be at least 1")
        if self.verify.samples < 1:
            raise ValueError("VERIFY_SAMPLES must be at least 1")


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


def load_config() -> AppConfig:
    """Load configuration from environment variables."""

    debug_mode = _env_flag("DEBUG", "false")
    log_level = os.getenv("LOG_LEVEL", "DEBUG" if debug_mode else "INFO").upper()

    tolerance_config = ToleranceConfig(
        algebra=float(os.getenv("ALGEBRA_TOLERANCE", "1e-12")),
        probability=float(os.getenv("PROBABILITY_TOLERANCE", "1e-12")),
        oracle=float(os.getenv("ORACLE_TOLERANCE", "1e-10")),
        equilibrium=float(os.getenv("EQUILIBRIUM_TOLERANCE", "1e-10")),
    )

    sweep_config = SweepConfig(
        grid_points=int(os.getenv("SWEEP_GRID_POINTS", "101")),
        max_workers=int(os.getenv("SWEEP_MAX_WORKERS", "4")),
        enable_parallel_processing=_env_flag("ENABLE_PARALLEL_PROCESSING", "true"),
    )

    verify_config = VerifyConfig(
        samples=int(os.getenv("VERIFY_SAMPLES", "1000")),
        seed=int(os.getenv("VERIFY_SEED", "0")),
        tolerance=float(os.getenv("VERIFY_TOLERANCE", "1e-10")),
    )

    return AppConfig(
        tolerances=tolerance_config,
        sweep=sweep_config,
        verify=verify_config,
        debug_mode=debug_mode,
        log_level=log_level,
        output_precision=int(os.getenv("OUTPUT_PRECISION", "12")),
    )


# Global configuration instance
config = load_config()
