"""
Algebra Configuration
Handles environment variables and configuration validation
"""

import os
from errors import ConfigError
from logger_config import setup_logger

logger = setup_logger()

DEFAULT_TOLERANCE = 1e-9
DEFAULT_EXTREME_BOUND = 5


def _read(name, default, cast):
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        return cast(raw)
    except ValueError as e:
        raise ConfigError(f"{name}={raw!r} is not a valid {cast.__name__}") from e


class AlgebraConfig:
    def __init__(self, tolerance=None, seed=None, extreme_bound=None):
        """Initialize configuration from environment variables; explicit arguments win"""
        self.tolerance = float(tolerance) if tolerance is not None else _read(
            "MAXALG_TOLERANCE", DEFAULT_TOLERANCE, float)
        self.seed = int(seed) if seed is not None else _read("MAXALG_SEED", 0, int)
        self.extreme_bound = int(extreme_bound) if extreme_bound is not None else _read(
            "MAXALG_EXTREME_BOUND", DEFAULT_EXTREME_BOUND, int)

        # Oracle budgets
        self.oracle_pattern_dim = _read("MAXALG_ORACLE_PATTERN_DIM", 4, int)
        self.oracle_cycle_dim = _read("MAXALG_ORACLE_CYCLE_DIM", 6, int)
        self.oracle_witness_dim = _read("MAXALG_ORACLE_WITNESS_DIM", 3, int)
        self.oracle_max_candidates = _read("MAXALG_ORACLE_MAX_CANDIDATES", 1_000_000, int)

    def validate(self):
        """Validate configuration values"""
        problems = []
        if not (self.tolerance >= 0 and self.tolerance != float("inf")):
            problems.append(f"tolerance must be a finite value >= 0 (got {self.tolerance})")
        for label, value in [
            ("MAXALG_EXTREME_BOUND", self.extreme_bound),
            ("MAXALG_ORACLE_PATTERN_DIM", self.oracle_pattern_dim),
            ("MAXALG_ORACLE_CYCLE_DIM", self.oracle_cycle_dim),
            ("MAXALG_ORACLE_WITNESS_DIM", self.oracle_witness_dim),
            ("MAXALG_ORACLE_MAX_CANDIDATES", self.oracle_max_candidates),
        ]:
            if value < 1:
                problems.append(f"{label} must be at least 1 (got {value})")

        if problems:
            for problem in problems:
                logger.error(f"❌ {problem}")
            return False

        logger.info("✅ Configuration validation successful")
        return True

    def tolerance_policy(self):
        """The floating-point comparison policy for this configuration"""
        from semiring import Tolerance

        return Tolerance(self.tolerance)

    def oracle_budget(self):
        """Limits applied before any exhaustive oracle search starts"""
        from oracles import OracleBudget

        return OracleBudget(
            max_pattern_dim=self.oracle_pattern_dim,
            max_cycle_dim=self.oracle_cycle_dim,
            max_witness_dim=self.oracle_witness_dim,
            max_candidates=self.oracle_max_candidates,
        )

    def log_config(self):
        """Log current configuration"""
        logger.info("📋 Current Configuration:")
        logger.info(f"   Tolerance: {self.tolerance}")
        logger.info(f"   Seed: {self.seed}")
        logger.info(f"   Extreme Enumeration Bound: {self.extreme_bound}")
        logger.info(f"   Oracle Budgets: pattern={self.oracle_pattern_dim}, "
                    f"cycle={self.oracle_cycle_dim}, witness={self.oracle_witness_dim}, "
                    f"candidates={self.oracle_max_candidates}")
