"""Workspace ingestion, the twelve task kinds and their reports."""

from .base import BaseTask, TaskContext, TaskSettings
from .completion_tasks import CyCompleteTask, DeformTask, IsoCheckTask
from .config import get_environment_config, validate_config
from .exceptions import (
    ExecutionError,
    TaskConfigError,
    TaskError,
    TaskNotFoundError,
    TaskRegistryError,
    ValidationError,
    WorkspaceError,
)
from .homology_tasks import AsCheckTask, ClassifyTask, CySmashTask, HdetTask, NakayamaTask, SsCheckTask
from .registry import TaskRegistry, get_task_registry
from .result import FAIL, INVALID, PASS, ReportEncoder, TaskReport, reports_to_json
from .runner import run_tasks, select_tasks
from .structure_tasks import IdentitiesTask, SmashTask, VerifyTask
from .workspace import TASK_KINDS, TaskSpec, Workspace, WorkspaceDocument, cross_check, parse_workspace


__all__ = [
    'AsCheckTask',
    'BaseTask',
    'ClassifyTask',
    'CyCompleteTask',
    'CySmashTask',
    'DeformTask',
    'ExecutionError',
    'FAIL',
    'HdetTask',
    'INVALID',
    'IdentitiesTask',
    'IsoCheckTask',
    'NakayamaTask',
    'PASS',
    'ReportEncoder',
    'SmashTask',
    'SsCheckTask',
    'TASK_KINDS',
    'TaskConfigError',
    'TaskContext',
    'TaskError',
    'TaskNotFoundError',
    'TaskRegistry',
    'TaskRegistryError',
    'TaskReport',
    'TaskSettings',
    'TaskSpec',
    'ValidationError',
    'VerifyTask',
    'Workspace',
    'WorkspaceDocument',
    'WorkspaceError',
    'cross_check',
    'get_environment_config',
    'get_task_registry',
    'parse_workspace',
    'reports_to_json',
    'run_tasks',
    'select_tasks',
    'validate_config',
]
