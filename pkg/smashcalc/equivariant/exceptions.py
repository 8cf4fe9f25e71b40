"""
Exceptions raised by the equivariant package.
"""

from ..core.exceptions import SmashcalcError


class EquivariantError(SmashcalcError):
    """Base exception for equivariant bimodule constructions."""
    pass


class SigmaConditionError(EquivariantError):
    """Raised when σ fails the coproduct condition or does not commute with S^2."""
    pass


class IndexMismatchError(EquivariantError):
    """Raised when bimodules with incompatible actions or indices are combined."""
    pass
