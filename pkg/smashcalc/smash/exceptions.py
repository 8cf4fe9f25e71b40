"""
Exceptions raised by the smash package.
"""

from ..core.exceptions import SmashcalcError


class SmashError(SmashcalcError):
    """Base exception for smash product constructions."""
    pass


class ActionError(SmashError):
    """Raised when an action is malformed or fails the module-algebra axioms."""
    pass
