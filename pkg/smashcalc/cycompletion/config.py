"""Configuration settings for the cycompletion package."""

import os

from ..core import config as core_config

# Tensor degree through which completions and their smash products are built
COMPLETION_TRUNCATION: int = int(os.getenv("SMASHCALC_COMPLETION_TRUNCATION", str(core_config.DEFAULT_TRUNCATION)))

# Path length kept for path algebras of quivers with oriented cycles
PATH_LENGTH_BOUND: int = int(os.getenv("SMASHCALC_PATH_LENGTH_BOUND", "4"))

# Largest tensor component the certificates sweep pair by pair
COMPONENT_SWEEP_LIMIT: int = int(os.getenv("SMASHCALC_COMPONENT_SWEEP_LIMIT", "400"))


def validate_config() -> None:
    """
    Validate the cycompletion configuration settings.

    Raises:
        ValueError: If configuration is invalid
    """
    if COMPLETION_TRUNCATION < 0:
        raise ValueError("SMASHCALC_COMPLETION_TRUNCATION must be non-negative")

    if PATH_LENGTH_BOUND < 0:
        raise ValueError("SMASHCALC_PATH_LENGTH_BOUND must be non-negative")

    if COMPONENT_SWEEP_LIMIT < 1:
        raise ValueError("SMASHCALC_COMPONENT_SWEEP_LIMIT must be positive")
