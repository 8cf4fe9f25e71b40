"""Configuration settings for smashcalc tasks and the command line."""

import os
from typing import Any, Dict

# Workspace header
SMASHCALC_VERSION: str = os.getenv("SMASHCALC_VERSION", "1")
SUPPORTED_VERSIONS: list[str] = ["1"]

# Report output
REPORT_FORMAT: str = os.getenv("SMASHCALC_REPORT_FORMAT", "text")
REPORT_FORMATS: list[str] = ["text", "json"]
JSON_INDENT: int = int(os.getenv("SMASHCALC_JSON_INDENT", "2"))

# Task execution
PARALLEL_WORKERS: int = int(os.getenv("SMASHCALC_PARALLEL_WORKERS", "4"))

# Exit codes
EXIT_PASS: int = 0
EXIT_FAIL: int = 1
EXIT_INPUT_ERROR: int = 2

# Environment-specific Configuration
TASK_ENVIRONMENT: str = os.getenv("SMASHCALC_ENVIRONMENT", "production")
TASK_ENV_CONFIGS: Dict[str, Dict[str, Any]] = {
    "development": {
        "debug_logging": True,
        "parallel_workers": 2,
    },
    "test": {
        "debug_logging": False,
        "parallel_workers": 2,
    },
    "production": {
        "debug_logging": False,
        "parallel_workers": PARALLEL_WORKERS,
    },
}


def get_environment_config() -> Dict[str, Any]:
    """Get configuration for current environment."""
    return TASK_ENV_CONFIGS.get(TASK_ENVIRONMENT, TASK_ENV_CONFIGS["production"])


def validate_config() -> None:
    """
    Validate the task configuration settings.

    Raises:
        ValueError: If configuration is invalid
    """
    if TASK_ENVIRONMENT not in TASK_ENV_CONFIGS:
        raise ValueError(f"Invalid SMASHCALC_ENVIRONMENT: {TASK_ENVIRONMENT}")

    if SMASHCALC_VERSION not in SUPPORTED_VERSIONS:
        raise ValueError(f"Unsupported SMASHCALC_VERSION: {SMASHCALC_VERSION}")

    if REPORT_FORMAT not in REPORT_FORMATS:
        raise ValueError(f"SMASHCALC_REPORT_FORMAT must be one of {REPORT_FORMATS}")

    if PARALLEL_WORKERS < 1:
        raise ValueError("SMASHCALC_PARALLEL_WORKERS must be at least 1")

    if JSON_INDENT < 0:
        raise ValueError("SMASHCALC_JSON_INDENT must be non-negative")
