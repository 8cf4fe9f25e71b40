"""Configuration settings shared by every smashcalc sub-package."""

import os
from typing import Any, Dict

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Ground field used when a workspace does not declare one
DEFAULT_FIELD: str = os.getenv("SMASHCALC_FIELD", "Q")

# Truncation and degree bounds
DEFAULT_TRUNCATION: int = int(os.getenv("SMASHCALC_TRUNCATION", "4"))
DEFAULT_MAX_DEGREE: int = int(os.getenv("SMASHCALC_MAX_DEGREE", "4"))
RESOLUTION_BOUND: int = int(os.getenv("SMASHCALC_RESOLUTION_BOUND", "6"))

# Exhaustive search over F_p^r is used while p**r stays below this bound
INVERTIBLE_SEARCH_LIMIT: int = int(os.getenv("SMASHCALC_INVERTIBLE_SEARCH_LIMIT", "4096"))

# Logging Configuration
LOG_LEVEL: str = os.getenv("SMASHCALC_LOG_LEVEL", "INFO")
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_FILE = os.getenv("SMASHCALC_LOG_FILE", "smashcalc.log")

ENVIRONMENT: str = os.getenv("SMASHCALC_ENVIRONMENT", "production")
ENV_CONFIGS: Dict[str, Dict[str, Any]] = {
    "development": {
        "debug_logging": True,
        "resolution_bound": 8,
    },
    "test": {
        "debug_logging": False,
        "resolution_bound": 6,
    },
    "production": {
        "debug_logging": False,
        "resolution_bound": RESOLUTION_BOUND,
    },
}


def get_environment_config() -> Dict[str, Any]:
    """Get configuration for current environment."""
    return ENV_CONFIGS.get(ENVIRONMENT, ENV_CONFIGS["production"])


def validate_config() -> None:
    """
    Validate the configuration settings.

    Raises:
        ValueError: If configuration is invalid
    """
    if ENVIRONMENT not in ENV_CONFIGS:
        raise ValueError(f"Invalid SMASHCALC_ENVIRONMENT: {ENVIRONMENT}")

    if DEFAULT_TRUNCATION < 0:
        raise ValueError("SMASHCALC_TRUNCATION must be non-negative")

    if DEFAULT_MAX_DEGREE < 0:
        raise ValueError("SMASHCALC_MAX_DEGREE must be non-negative")

    if RESOLUTION_BOUND < 1:
        raise ValueError("SMASHCALC_RESOLUTION_BOUND must be at least 1")

    if INVERTIBLE_SEARCH_LIMIT < 1:
        raise ValueError("SMASHCALC_INVERTIBLE_SEARCH_LIMIT must be positive")
