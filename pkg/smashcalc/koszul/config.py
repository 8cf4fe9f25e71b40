"""Configuration settings for the koszul package."""

import os

from ..core import config as core_config

# Polynomial degree through which elements, exactness and H-linearity are checked
KOSZUL_TRUNCATION: int = int(os.getenv("SMASHCALC_KOSZUL_TRUNCATION", str(core_config.DEFAULT_TRUNCATION)))

# Largest number of variables accepted by PolynomialModuleAlgebra
KOSZUL_MAX_VARIABLES: int = int(os.getenv("SMASHCALC_KOSZUL_MAX_VARIABLES", "4"))


def validate_config() -> None:
    """
    Validate the koszul configuration settings.

    Raises:
        ValueError: If configuration is invalid
    """
    if KOSZUL_TRUNCATION < 0:
        raise ValueError("SMASHCALC_KOSZUL_TRUNCATION must be non-negative")

    if KOSZUL_MAX_VARIABLES < 0:
        raise ValueError("SMASHCALC_KOSZUL_MAX_VARIABLES must be non-negative")
