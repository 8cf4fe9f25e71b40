"""
Homology exceptions for smashcalc.
"""

from ..core.exceptions import SmashcalcError


class HomologyError(SmashcalcError):
    """Base exception for resolution and Ext computations."""
    pass


class ResolutionTruncatedError(HomologyError):
    """Raised when a resolution is needed beyond the degrees it was built to."""
    pass


class NotFreeGeneratorError(HomologyError):
    """Raised when a chosen element does not freely generate a rung."""
    pass


class ArtinSchelterError(HomologyError):
    """Raised when one-sided Ext is not one-dimensional in a single degree."""
    pass


class PreconditionError(HomologyError):
    """Raised when a theorem check is asked of objects outside its hypotheses."""
    pass
