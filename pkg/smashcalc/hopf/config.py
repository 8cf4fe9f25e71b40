"""Configuration settings for the hopf package."""

import os

# Largest matrix group closed by matrix_group_algebra
MATRIX_GROUP_LIMIT: int = int(os.getenv("SMASHCALC_MATRIX_GROUP_LIMIT", "512"))

# Largest dimension for which verify() sweeps all basis triples
HOPF_VERIFY_MAX_DIM: int = int(os.getenv("SMASHCALC_HOPF_VERIFY_MAX_DIM", "200"))


def validate_config() -> None:
    """
    Validate the hopf configuration settings.

    Raises:
        ValueError: If configuration is invalid
    """
    if MATRIX_GROUP_LIMIT < 1:
        raise ValueError("SMASHCALC_MATRIX_GROUP_LIMIT must be positive")

    if HOPF_VERIFY_MAX_DIM < 1:
        raise ValueError("SMASHCALC_HOPF_VERIFY_MAX_DIM must be positive")
