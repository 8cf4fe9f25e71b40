"""Registry mapping task kinds to task classes."""

import logging
from typing import Dict, List, Optional, Type

from .base import BaseTask, TaskSettings
from .completion_tasks import CyCompleteTask, DeformTask, IsoCheckTask
from .config import get_environment_config, validate_config
from .exceptions import TaskConfigError, TaskNotFoundError, TaskRegistryError
from .homology_tasks import AsCheckTask, ClassifyTask, CySmashTask, HdetTask, NakayamaTask, SsCheckTask
from .result import TaskReport
from .structure_tasks import IdentitiesTask, SmashTask, VerifyTask
from .workspace import Workspace

logger = logging.getLogger(__name__)


class TaskRegistry:
    """Registry for managing and accessing task kinds."""

    def __init__(self):
        """Initialize the task registry."""
        self._tasks: Dict[str, BaseTask] = {}
        self._task_classes: Dict[str, Type[BaseTask]] = {
            "verify": VerifyTask,
            "smash": SmashTask,
            "identities": IdentitiesTask,
            "classify": ClassifyTask,
            "nakayama": NakayamaTask,
            "hdet": HdetTask,
            "cy-smash": CySmashTask,
            "as-check": AsCheckTask,
            "ss-check": SsCheckTask,
            "cy-complete": CyCompleteTask,
            "deform": DeformTask,
            "iso-check": IsoCheckTask,
        }
        validate_config()

    def register_task(self, kind: str, task_class: Type[BaseTask]) -> None:
        """
        Register a new task class.

        Args:
            kind: Unique task kind
            task_class: Task class to register

        Raises:
            TaskRegistryError: If registration fails
        """
        if kind in self._task_classes:
            raise TaskRegistryError(f"Task kind {kind} is already registered")

        if not isinstance(task_class, type) or not issubclass(task_class, BaseTask):
            raise TaskRegistryError(f"Task class {getattr(task_class, '__name__', task_class)} must inherit from BaseTask")

        self._task_classes[kind] = task_class

    def get_task(self, kind: str, **kwargs) -> BaseTask:
        """
        Get a task instance by kind.

        Args:
            kind: Task kind to get
            **kwargs: Additional configuration for the task

        Returns:
            Instance of the requested task

        Raises:
            TaskNotFoundError: If the kind is not registered
            TaskConfigError: If the task cannot be created
        """
        if kind in self._tasks:
            return self._tasks[kind]

        task_class = self._task_classes.get(kind)
        if not task_class:
            raise TaskNotFoundError(f"Task kind {kind} not found")

        try:
            kwargs.update(get_environment_config())
            task = task_class(**kwargs)
        except Exception as e:
            raise TaskConfigError(f"Failed to initialize task {kind}: {e}")
        self._tasks[kind] = task
        return task

    def list_tasks(self) -> List[BaseTask]:
        return [self.get_task(kind) for kind in self._task_classes]

    def get_task_names(self) -> List[str]:
        """Registered task kinds in registration order."""
        return list(self._task_classes)

    def get_task_descriptions(self) -> Dict[str, str]:
        return {task.name: task.description for task in self.list_tasks()}

    def execute_task(self, workspace: Workspace, name: str, settings: Optional[TaskSettings] = None,
                     session_id: Optional[str] = None) -> TaskReport:
        """
        Run the workspace task called ``name``.

        Raises:
            TaskNotFoundError: If the workspace has no such task
        """
        spec = workspace.task(name)
        if spec is None:
            raise TaskNotFoundError(f"The workspace has no task {name!r}")
        task = self.get_task(spec.kind)
        logger.debug(f"Running {name} as {spec.kind}")
        return task.execute(workspace, spec, settings, session_id)

    def clear_cache(self) -> None:
        """Clear the task instance cache."""
        self._tasks.clear()


# Global registry instance
_registry: Optional[TaskRegistry] = None


def get_task_registry() -> TaskRegistry:
    """
    Get the global task registry instance.

    Returns:
        TaskRegistry instance
    """
    global _registry
    if _registry is None:
        _registry = TaskRegistry()
    return _registry
