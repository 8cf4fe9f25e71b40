"""Configuration settings for the homology package."""

import os

from ..core import config as core_config

# Longest resolution built by the smoothness probes
RESOLUTION_BOUND: int = int(os.getenv("SMASHCALC_HOMOLOGY_RESOLUTION_BOUND", str(core_config.RESOLUTION_BOUND)))

# Iterations of x -> 3x^2 - 2x^3 allowed when lifting an idempotent modulo the radical
IDEMPOTENT_LIFT_STEPS: int = int(os.getenv("SMASHCALC_IDEMPOTENT_LIFT_STEPS", "64"))

# Bar cochains above this dimension are refused
BAR_COCHAIN_LIMIT: int = int(os.getenv("SMASHCALC_BAR_COCHAIN_LIMIT", "4096"))

# Largest order tried when a Nakayama automorphism is raised to powers
AUTOMORPHISM_ORDER_LIMIT: int = int(os.getenv("SMASHCALC_AUTOMORPHISM_ORDER_LIMIT", "24"))


def validate_config() -> None:
    """
    Validate the homology configuration settings.

    Raises:
        ValueError: If configuration is invalid
    """
    if RESOLUTION_BOUND < 1:
        raise ValueError("SMASHCALC_HOMOLOGY_RESOLUTION_BOUND must be at least 1")

    if IDEMPOTENT_LIFT_STEPS < 1:
        raise ValueError("SMASHCALC_IDEMPOTENT_LIFT_STEPS must be positive")

    if BAR_COCHAIN_LIMIT < 1:
        raise ValueError("SMASHCALC_BAR_COCHAIN_LIMIT must be positive")

    if AUTOMORPHISM_ORDER_LIMIT < 1:
        raise ValueError("SMASHCALC_AUTOMORPHISM_ORDER_LIMIT must be positive")
