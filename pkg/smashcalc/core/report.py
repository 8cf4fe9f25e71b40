"""Pass/fail records for axiom and identity sweeps."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

logger = logging.getLogger(__name__)


@dataclass
class AxiomCheck:
    """Outcome of one identity evaluated over a family of basis tuples.

    Attributes:
        name: Identifier of the identity
        passed: Whether every tuple satisfied it
        checked: Number of tuples evaluated
        witness: First failing tuple, when any
        detail: Free text shown next to the verdict
        skipped: True when the identity could not be evaluated
    """
    name: str
    passed: bool
    checked: int = 0
    witness: Optional[Tuple[Any, ...]] = None
    detail: str = ""
    skipped: bool = False

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            data["witness"] = [str(w) for w in self.witness]
        if self.detail:
            data["detail"] = self.detail
        if self.skipped:
            data["skipped"] = True
        return data


@dataclass
class CheckReport:
    """An ordered list of ``AxiomCheck`` records about one object."""

    subject: str
    checks: List[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Optional[AxiomCheck]:
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def add(self, check: AxiomCheck) -> AxiomCheck:
        self.checks.append(check)
        if not check.passed:
            logger.warning(f"{self.subject}: {check.name} fails at {check.witness} {check.detail}".rstrip())
        return check

    def record(self, name: str, passed: bool, detail: str = "", witness: Optional[Tuple[Any, ...]] = None) -> AxiomCheck:
        return self.add(AxiomCheck(name=name, passed=passed, checked=1, witness=witness, detail=detail))

    def skip(self, name: str, detail: str) -> AxiomCheck:
        return self.add(AxiomCheck(name=name, passed=True, detail=detail, skipped=True))

    def sweep(self, name: str, tuples: Iterable[Tuple[Any, ...]],
              holds: Callable[..., bool], detail: str = "") -> AxiomCheck:
        """Evaluate ``holds(*t)`` on every tuple, stopping at the first failure."""
        count = 0
        for t in tuples:
            count += 1
            if not holds(*t):
                return self.add(AxiomCheck(name=name, passed=False, checked=count, witness=tuple(t), detail=detail))
        return self.add(AxiomCheck(name=name, passed=True, checked=count, detail=detail))

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for c in other.checks:
            name = f"{prefix}{c.name}" if prefix else c.name
            self.checks.append(AxiomCheck(name, c.passed, c.checked, c.witness, c.detail, c.skipped))
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def __str__(self) -> str:
        lines = [f"{self.subject}: {'pass' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "skip" if c.skipped else ("ok" if c.passed else "FAIL")
            line = f"  [{mark}] {c.name} ({c.checked})"
            if c.witness is not None:
                line += f" witness={c.witness}"
            if c.detail:
                line += f" {c.detail}"
            lines.append(line)
        return "\n".join(lines)
