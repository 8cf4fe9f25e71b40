"""Unit tests for custom exceptions."""

import pytest

from smashcalc.core.exceptions import FieldError, NotInvertibleError, SmashcalcError
from smashcalc.cycompletion import CocycleError, CompletionError, CyclicQuiverError
from smashcalc.equivariant import EquivariantError, IndexMismatchError, SigmaConditionError
from smashcalc.homology import HomologyError, NotFreeGeneratorError, PreconditionError
from smashcalc.hopf.exceptions import AntipodeError, HopfError
from smashcalc.koszul import KoszulError
from smashcalc.smash.exceptions import ActionError, SmashError
from smashcalc.tasks.exceptions import (
    ExecutionError,
    TaskError,
    TaskNotFoundError,
    ValidationError,
    WorkspaceError,
)


class TestExceptionHierarchy:
    """Test that every package error derives from SmashcalcError."""

    @pytest.mark.parametrize("error, parent", [
        (FieldError, SmashcalcError),
        (NotInvertibleError, SmashcalcError),
        (AntipodeError, HopfError),
        (ActionError, SmashError),
        (SigmaConditionError, EquivariantError),
        (IndexMismatchError, EquivariantError),
        (PreconditionError, HomologyError),
        (NotFreeGeneratorError, HomologyError),
        (KoszulError, SmashcalcError),
        (CyclicQuiverError, CompletionError),
        (CocycleError, CompletionError),
        (TaskNotFoundError, TaskError),
        (ValidationError, TaskError),
        (ExecutionError, TaskError),
        (TaskError, SmashcalcError),
    ])
    def test_parent(self, error, parent):
        """Test the parent class."""
        assert issubclass(error, parent)
        assert issubclass(error, SmashcalcError)

    def test_message(self):
        """Test that the message is kept."""
        assert str(HopfError("S² ≠ id")) == "S² ≠ id"


class TestWorkspaceError:
    """Test positioned workspace errors."""

    def test_entries_joined(self):
        """Test the default message."""
        error = WorkspaceError([("hopf.C2", "missing order"), ("3:4", "bad token")])
        assert error.entries == [("hopf.C2", "missing order"), ("3:4", "bad token")]
        assert str(error) == "hopf.C2: missing order; 3:4: bad token"

    def test_explicit_message(self):
        """Test that an explicit message wins."""
        error = WorkspaceError([("field", "bad")], message="workspace rejected")
        assert str(error) == "workspace rejected"
        assert isinstance(error, TaskError)
