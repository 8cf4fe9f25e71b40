"""
Exceptions raised by the koszul package.
"""

from ..core.exceptions import SmashcalcError


class KoszulError(SmashcalcError):
    """Raised when a polynomial module algebra or its Koszul data is malformed."""
    pass
