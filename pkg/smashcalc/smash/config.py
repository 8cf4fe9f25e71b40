"""Configuration settings for the smash package."""

import os

# Associativity of a constructed smash or Δ_i algebra is re-swept up to this dimension
VERIFY_MAX_DIM: int = int(os.getenv("SMASHCALC_SMASH_VERIFY_MAX_DIM", "64"))

# Index pairs (i) whose Δ_i identity suites verify_identities runs by default
DELTA_INDICES = tuple(int(i) for i in os.getenv("SMASHCALC_DELTA_INDICES", "0,1").split(",") if i.strip())


def validate_config() -> None:
    """
    Validate the smash configuration settings.

    Raises:
        ValueError: If configuration is invalid
    """
    if VERIFY_MAX_DIM < 1:
        raise ValueError("SMASHCALC_SMASH_VERIFY_MAX_DIM must be positive")

    if not DELTA_INDICES:
        raise ValueError("SMASHCALC_DELTA_INDICES must name at least one index")
