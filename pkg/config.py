"""
Configuration management for the DEE toolkit.

Numeric tolerances, report formatting and sweep settings live here.
Values are loaded from an optional .env file next to this module, then
from environment variables. With neither present the defaults below apply,
and those defaults are what every test and documented example assumes.
"""

import os
from pathlib import Path
from typing import Optional

TOOL_NAME = "dee"
TOOL_VERSION = "1.0.0"


class Config:
    """Configuration manager for solver tolerances and output settings."""

    def __init__(self, env_file: Optional[Path] = None):
        self.env_file = env_file or Path(__file__).parent / ".env"
        self._load_config()

    def _load_config(self):
        """Load configuration from .env file or environment variables."""
        # First try to load from .env file
        if self.env_file.exists():
            self._load_env_file()

        self._problems = []
        self.PRECISION = self._get_int("DEE_PRECISION", 6)
        self.JACOBI_MAX_SWEEPS = self._get_int("DEE_JACOBI_MAX_SWEEPS", 100)
        self.JACOBI_TOL = self._get_float("DEE_JACOBI_TOL", 1e-12)
        self.ROTATION_SKIP = self._get_float("DEE_ROTATION_SKIP", 1e-300)
        self.ZERO_TOL = self._get_float("DEE_ZERO_TOL", 1e-7)
        self.EQUALITY_TOL = self._get_float("DEE_EQUALITY_TOL", 1e-9)
        self.SWEEP_WORKERS = self._get_int("DEE_SWEEP_WORKERS", 4)
        self.LOG_LEVEL = os.getenv("DEE_LOG_LEVEL", "WARNING").upper()

    def _load_env_file(self):
        """Load environment variables from .env file."""
        with open(self.env_file, 'r', encoding='utf-8') as f:
            for line in f:
                line = line.strip()
                # Skip comments and empty lines
                if not line or line.startswith('#'):
                    continue
                if '=' in line:
                    key, value = line.split('=', 1)
                    key = key.strip()
                    value = value.strip()
                    # Remove quotes if present
                    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
                        value = value[1:-1]
                    # Real environment wins over the file
                    os.environ.setdefault(key, value)

    def validate(self) -> list:
        """Return a list of problems with the loaded values (empty when fine)."""
        problems = list(self._problems)
        if self.PRECISION < 1:
            problems.append("DEE_PRECISION must be >= 1")
        if self.JACOBI_MAX_SWEEPS < 0:
            problems.append("DEE_JACOBI_MAX_SWEEPS must be >= 0")
        for name in ("JACOBI_TOL", "ZERO_TOL", "EQUALITY_TOL"):
            if getattr(self, name) <= 0:
                problems.append(f"DEE_{name} must be positive")
        if self.SWEEP_WORKERS < 1:
            problems.append("DEE_SWEEP_WORKERS must be >= 1")
        return problems

    def _get_int(self, key: str, default: int) -> int:
        raw = os.getenv(key, "").strip()
        if not raw:
            return default
        try:
            return int(raw)
        except ValueError:
            self._problems.append(f"{key} must be an integer, got {raw!r}")
            return default

    def _get_float(self, key: str, default: float) -> float:
        raw = os.getenv(key, "").strip()
        if not raw:
            return default
        try:
            return float(raw)
        except ValueError:
            self._problems.append(f"{key} must be a number, got {raw!r}")
            return default


# Global config instance
config = Config()


# Convenience functions
def get_precision() -> int:
    """Significant digits for report floats."""
    return config.PRECISION


def get_jacobi_max_sweeps() -> int:
    return config.JACOBI_MAX_SWEEPS


def get_jacobi_tol() -> float:
    """Relative off-diagonal Frobenius norm at which Jacobi stops."""
    return config.JACOBI_TOL


def get_rotation_skip() -> float:
    return config.ROTATION_SKIP


def get_zero_tol() -> float:
    """Relative threshold under which an eigenvalue counts as zero."""
    return config.ZERO_TOL


def get_equality_tol() -> float:
    return config.EQUALITY_TOL


def get_sweep_workers() -> int:
    return config.SWEEP_WORKERS


def get_log_level() -> str:
    return config.LOG_LEVEL


if __name__ == "__main__":
    print("=== DEE configuration ===")
    print(f"env file: {config.env_file.resolve()} ({'found' if config.env_file.exists() else 'absent'})")
    for key in ("PRECISION", "JACOBI_MAX_SWEEPS", "JACOBI_TOL", "ROTATION_SKIP",
                "ZERO_TOL", "EQUALITY_TOL", "SWEEP_WORKERS", "LOG_LEVEL"):
        print(f"  DEE_{key} = {getattr(config, key)}")
    problems = config.validate()
    if problems:
        print("\n[ERROR] " + "; ".join(problems))
    else:
        print("\n[OK] configuration valid")
