"""
Exceptions raised by the tasks package.
"""

from typing import List, Optional, Sequence, Tuple

from ..core.exceptions import SmashcalcError


class TaskError(SmashcalcError):
    """Base exception for all task-related errors."""
    pass


class TaskNotFoundError(TaskError):
    """Raised when a requested task or task kind is not found."""
    pass


class TaskRegistryError(TaskError):
    """Raised when there is an error with the task registry."""
    pass


class TaskConfigError(TaskError):
    """Raised when a task cannot be configured from the workspace and flags."""
    pass


class WorkspaceError(TaskError):
    """Raised when a workspace document fails to parse or validate.

    Attributes:
        entries: (position, message) pairs; a position is ``line:column`` for
            syntax errors and a dotted path into the document otherwise
    """

    def __init__(self, entries: Sequence[Tuple[str, str]], message: Optional[str] = None):
        self.entries: List[Tuple[str, str]] = list(entries)
        super().__init__(message or "; ".join(f"{where}: {what}" for where, what in self.entries))


class ValidationError(TaskError):
    """Raised when task parameters are invalid."""
    pass


class ExecutionError(TaskError):
    """Raised when a task fails during execution."""
    pass
