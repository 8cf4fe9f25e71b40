"""Base interface for smashcalc tasks."""

import json
import logging
import uuid
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Tuple

from ..core import config as core_config
from ..core.exceptions import SmashcalcError
from ..core.report import CheckReport
from .exceptions import ExecutionError, ValidationError, WorkspaceError
from .result import FAIL, INVALID, PASS, ReportEncoder, TaskReport
from .workspace import TaskSpec, Workspace


@dataclass
class TaskSettings:
    """Run-wide defaults; a value set on the task itself wins over these."""
    truncation: int = core_config.DEFAULT_TRUNCATION
    max_degree: int = core_config.DEFAULT_MAX_DEGREE
    bound: Optional[int] = None


@dataclass
class TaskContext:
    """Context for task execution."""
    session_id: str
    workspace: Workspace
    spec: TaskSpec
    settings: TaskSettings
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def field(self):
        return self.workspace.field

    @property
    def truncation(self) -> int:
        return self.spec.truncation if self.spec.truncation is not None else self.settings.truncation

    @property
    def max_degree(self) -> int:
        return self.spec.max_degree if self.spec.max_degree is not None else self.settings.max_degree

    @property
    def bound(self) -> Optional[int]:
        return self.spec.bound if self.spec.bound is not None else self.settings.bound


Outcome = Tuple[Dict[str, Any], Optional[CheckReport]]


class BaseTask(ABC):
    """Base class for all smashcalc task kinds."""

    def __init__(self, **kwargs):
        """
        Initialize the task.

        Args:
            **kwargs: Additional configuration parameters from environment
        """
        self.logger = logging.getLogger(f"smashcalc.tasks.{self.__class__.__name__.lower()}")
        self._debug_logging = kwargs.get('debug_logging', False)

    @property
    @abstractmethod
    def name(self) -> str:
        """The task kind this class runs."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """Human-readable description of the task."""
        pass

    @property
    def requires(self) -> List[str]:
        """Task fields that must all be set."""
        return []

    @property
    def requires_one_of(self) -> List[str]:
        """Task fields of which at least one must be set."""
        return []

    def validate_parameters(self, spec: TaskSpec) -> None:
        """
        Validate the task fields before execution.

        Args:
            spec: The task as declared in the workspace

        Raises:
            ValidationError: If a needed field is missing
        """
        missing = [f for f in self.requires if getattr(spec, f) is None]
        if missing:
            raise ValidationError(f"{self.name} task {spec.name!r} needs {', '.join(missing)}")
        if self.requires_one_of and all(getattr(spec, f) is None for f in self.requires_one_of):
            raise ValidationError(f"{self.name} task {spec.name!r} needs one of {', '.join(self.requires_one_of)}")

    @abstractmethod
    def _execute(self, context: TaskContext) -> Outcome:
        """
        Internal execution method to be implemented by tasks.

        Args:
            context: Execution context

        Returns:
            The report data and the checks behind the verdict

        Raises:
            ExecutionError: If execution fails
        """
        pass

    def execute(self, workspace: Workspace, spec: TaskSpec, settings: Optional[TaskSettings] = None,
                session_id: Optional[str] = None) -> TaskReport:
        """
        Execute the task and turn every outcome into a report.

        Input errors give an ``invalid`` report, violated preconditions and
        failed checks a ``fail`` report.
        """
        start_time = datetime.now()
        context = TaskContext(
            session_id=session_id or uuid.uuid4().hex,
            workspace=workspace,
            spec=spec,
            settings=settings or TaskSettings(),
            metadata={"field": workspace.field.name},
        )
        try:
            self.validate_parameters(spec)
            data, checks = self._execute(context)
            checks = self._check_expectations(spec, data, checks)
            status = PASS if checks is None or checks.passed else FAIL
            report = TaskReport(spec.name, self.name, status, data, checks, metadata=context.metadata)

        except (ValidationError, WorkspaceError) as e:
            self.logger.error(f"Validation error: {e}")
            report = TaskReport(spec.name, self.name, INVALID, error=str(e), metadata=context.metadata)

        except (ExecutionError, SmashcalcError) as e:
            self.logger.error(f"Execution error: {e}")
            report = TaskReport(spec.name, self.name, FAIL, error=f"{e.__class__.__name__}: {e}",
                                metadata=context.metadata)

        except Exception as e:
            self.logger.error(f"Unexpected error: {e}", exc_info=True)
            report = TaskReport(spec.name, self.name, FAIL, error=f"Unexpected error: {e}", metadata=context.metadata)

        report.execution_time = (datetime.now() - start_time).total_seconds()
        self.logger.info(f"{spec.name}: {report.status} in {report.execution_time:.2f}s")
        return report

    def _check_expectations(self, spec: TaskSpec, data: Dict[str, Any],
                            checks: Optional[CheckReport]) -> Optional[CheckReport]:
        """Compare declared expectations with the report data, key by key."""
        if not spec.expect:
            return checks
        checks = checks if checks is not None else CheckReport(spec.name)
        for key in sorted(spec.expect):
            expected = _canonical(spec.expect[key])
            actual = _canonical(data.get(key))
            checks.record(f"expect {key}", actual == expected, detail=f"{actual} vs expected {expected}")
        return checks

    def __str__(self) -> str:
        return f"{self.name}: {self.description}"


def _canonical(value: Any) -> str:
    return json.dumps(value, cls=ReportEncoder, sort_keys=True, ensure_ascii=False)
