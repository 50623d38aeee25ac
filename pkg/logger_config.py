"""
Logging Configuration
Centralized logging setup for the max-algebra toolkit
"""

import logging
import sys
from datetime import datetime
import os


def _level_from_env(default=logging.WARNING):
    name = os.getenv("MAXALG_LOG_LEVEL", "").strip().upper()
    level = logging.getLevelName(name) if name else default
    return level if isinstance(level, int) else default


def setup_logger(name="MaxAlgebra", level=None):
    """Setup centralized logger with proper formatting"""
    if level is None:
        level = _level_from_env()

    # Create logger
    logger = logging.getLogger(name)

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    logger.setLevel(level)
    logger.propagate = False

    # Create formatters
    detailed_formatter = logging.Formatter(
        '%(asctime)s | %(levelname)8s | %(name)s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    simple_formatter = logging.Formatter(
        '%(asctime)s | %(levelname)s | %(message)s',
        datefmt='%H:%M:%S'
    )

    # Console handler; stdout is reserved for JSON/CSV documents
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(simple_formatter)
    logger.addHandler(console_handler)

    # File handler (optional - only if LOG_FILE is set)
    log_file = os.getenv("LOG_FILE")
    if log_file:
        try:
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(detailed_formatter)
            logger.addHandler(file_handler)
            logger.setLevel(logging.DEBUG)
            logger.info(f"📝 Logging to file: {log_file}")
        except OSError as e:
            logger.warning(f"⚠️ Could not setup file logging: {e}")

    # Keep hypothesis quiet during test runs
    logging.getLogger("hypothesis").setLevel(logging.WARNING)

    logger.info("🚀 Max-algebra logger initialized")

    return logger


def set_console_level(level, name="MaxAlgebra"):
    """Change the console verbosity of an already configured logger"""
    logger = setup_logger(name)
    has_file = any(isinstance(h, logging.FileHandler) for h in logger.handlers)
    logger.setLevel(logging.DEBUG if has_file else level)
    for handler in logger.handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setLevel(level)
    return logger


def log_system_info():
    """Log system information for debugging"""
    logger = setup_logger()

    logger.info("📊 System Information:")
    logger.info(f"   Python Version: {sys.version}")
    logger.info(f"   Current Time: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    logger.info(f"   Working Directory: {os.getcwd()}")

    env_vars = [
        "MAXALG_TOLERANCE",
        "MAXALG_EXTREME_BOUND",
        "MAXALG_ORACLE_PATTERN_DIM",
        "MAXALG_ORACLE_CYCLE_DIM",
        "MAXALG_ORACLE_WITNESS_DIM",
        "MAXALG_SEED",
        "MAXALG_LOG_LEVEL",
    ]
    for var in env_vars:
        value = os.getenv(var, "Not Set")
        logger.info(f"   {var}: {value}")
