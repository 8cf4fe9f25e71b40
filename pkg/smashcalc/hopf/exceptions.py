"""
Exceptions raised by the hopf package.
"""

from ..core.exceptions import SmashcalcError


class HopfError(SmashcalcError):
    """Base exception for Hopf algebra errors."""
    pass


class CharacterError(HopfError):
    """Raised when a covector is not an algebra homomorphism H -> k."""
    pass


class AntipodeError(HopfError):
    """Raised when the antipode fails a property an operation relies on."""
    pass
