"""
Exceptions raised by the cycompletion package.
"""

from ..core.exceptions import SmashcalcError


class CompletionError(SmashcalcError):
    """Base exception for quivers, tensor algebras and Calabi-Yau completions."""
    pass


class CyclicQuiverError(CompletionError):
    """Raised when a construction needs an acyclic quiver and gets one with oriented cycles."""
    pass


class CocycleError(CompletionError):
    """Raised when a deformation map is not bimodule-linear or does not square to zero."""
    pass
