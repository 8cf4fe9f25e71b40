"""Run a selection of workspace tasks, optionally on a thread pool."""

import logging
import uuid
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from . import config
from .base import TaskSettings
from .exceptions import TaskNotFoundError
from .registry import TaskRegistry, get_task_registry
from .result import TaskReport
from .workspace import Workspace

logger = logging.getLogger(__name__)


def select_tasks(workspace: Workspace, names: Optional[Sequence[str]] = None) -> List[str]:
    """The requested task names in workspace order, or every task when none are given.

    Raises:
        TaskNotFoundError: a requested name is not a task of the workspace
    """
    declared = workspace.task_names()
    if not names:
        return declared
    unknown = [n for n in names if n not in declared]
    if unknown:
        raise TaskNotFoundError(f"Unknown task(s): {', '.join(unknown)}")
    wanted = set(names)
    return [n for n in declared if n in wanted]


def run_tasks(workspace: Workspace, names: Optional[Sequence[str]] = None, settings: Optional[TaskSettings] = None,
              parallel: bool = False, workers: Optional[int] = None,
              registry: Optional[TaskRegistry] = None) -> List[TaskReport]:
    """
    Run tasks and return their reports in workspace order.

    Args:
        workspace: The parsed workspace
        names: Task names to run; all tasks when empty
        settings: Run-wide defaults for truncation, degree and search bound
        parallel: Run independent tasks on a thread pool
        workers: Pool size, defaulting to the environment setting

    Returns:
        One report per task, whatever order they finished in
    """
    registry = registry or get_task_registry()
    selected = select_tasks(workspace, names)
    session_id = uuid.uuid4().hex
    settings = settings or TaskSettings()
    logger.info(f"Running {len(selected)} task(s) from {workspace.source or 'workspace'}")

    def run(name: str) -> TaskReport:
        return registry.execute_task(workspace, name, settings, session_id)

    if not parallel or len(selected) < 2:
        return [run(name) for name in selected]
    workers = workers or config.get_environment_config()["parallel_workers"]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, selected))
