"""
Core exceptions for smashcalc.
"""


class SmashcalcError(Exception):
    """Base exception for all smashcalc errors."""
    pass


class FieldError(SmashcalcError):
    """Raised when a field descriptor or field element cannot be parsed."""
    pass


class FieldMismatchError(SmashcalcError):
    """Raised when objects over different ground fields are combined."""
    pass


class ShapeMismatchError(SmashcalcError):
    """Raised when tensor or matrix dimensions do not agree."""
    pass


class AlgebraStructureError(SmashcalcError):
    """Raised when structure constants violate the algebra axioms."""
    pass


class NotInvertibleError(SmashcalcError):
    """Raised when an inverse is requested for a singular map or element."""
    pass


class TruncationError(SmashcalcError):
    """Raised when a computation needs degrees beyond the declared truncation."""
    pass
