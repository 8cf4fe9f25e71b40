"""Task execution reports."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from sympy import Rational

from ..core.linalg import LinearMap
from ..core.report import CheckReport
from . import config

PASS = "pass"
FAIL = "fail"
INVALID = "invalid"


class ReportEncoder(json.JSONEncoder):
    """JSON encoder for task reports: exact scalars as strings, maps as nested lists."""
    def default(self, obj):
        if isinstance(obj, TaskReport):
            return obj.to_dict()
        if isinstance(obj, CheckReport):
            return obj.to_dict()
        if isinstance(obj, LinearMap):
            return obj.to_rows()
        if isinstance(obj, (Fraction, Rational)):
            return str(obj)
        if isinstance(obj, (set, frozenset)):
            return sorted(str(x) for x in obj)
        if hasattr(obj, "to_dict"):
            return obj.to_dict()
        return str(obj)


@dataclass
class TaskReport:
    """Outcome of one task.

    ``execution_time`` is kept for logging and never serialized, so two runs
    on the same workspace give identical reports.
    """
    task: str
    kind: str
    status: str
    data: Dict[str, Any] = field(default_factory=dict)
    checks: Optional[CheckReport] = None
    error: Optional[str] = None
    execution_time: float = 0.0
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def exit_code(self) -> int:
        if self.status == PASS:
            return config.EXIT_PASS
        if self.status == INVALID:
            return config.EXIT_INPUT_ERROR
        return config.EXIT_FAIL

    def failures(self) -> List[Dict[str, Any]]:
        if self.checks is None:
            return []
        return [c.to_dict() for c in self.checks.failures()]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        result_dict: Dict[str, Any] = {
            "task": self.task,
            "kind": self.kind,
            "status": self.status,
            "data": self.data,
            "metadata": self.metadata,
        }
        if self.checks is not None:
            result_dict["checks"] = self.checks.to_dict()
        if self.error is not None:
            result_dict["error"] = self.error
        return result_dict

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self, cls=ReportEncoder, sort_keys=True, ensure_ascii=False,
                          indent=config.JSON_INDENT if indent is None else indent)

    def render_text(self) -> str:
        """Plain-text rendering with the same content as ``to_dict``."""
        lines = [f"{self.task} [{self.kind}]: {self.status.upper()}"]
        if self.error:
            lines.append(f"  error: {self.error}")
        for key in sorted(self.data):
            lines.append(f"  {key}: {json.dumps(self.data[key], cls=ReportEncoder, sort_keys=True, ensure_ascii=False)}")
        if self.checks is not None:
            lines.extend(f"  {line}" for line in str(self.checks).splitlines())
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render_text()


def reports_to_json(reports: List[TaskReport], indent: Optional[int] = None) -> str:
    """All reports of one run as a single deterministic JSON document."""
    overall = PASS if all(r.passed for r in reports) else (
        INVALID if any(r.status == INVALID for r in reports) else FAIL)
    payload = {"status": overall, "tasks": reports}
    return json.dumps(payload, cls=ReportEncoder, sort_keys=True, ensure_ascii=False,
                      indent=config.JSON_INDENT if indent is None else indent)
