"""Unit tests for task kinds, the registry, the runner and reports."""

import json
from fractions import Fraction

import pytest

from smashcalc.tasks import (
    FAIL,
    INVALID,
    PASS,
    TASK_KINDS,
    BaseTask,
    TaskNotFoundError,
    TaskRegistry,
    TaskRegistryError,
    TaskReport,
    TaskSettings,
    Workspace,
    reports_to_json,
    run_tasks,
    select_tasks,
)

DOCUMENT = {
    "field": "Q",
    "hopf": {"C2": {"kind": "cyclic", "order": 2}, "H4": {"kind": "sweedler"}},
    "algebras": {"D": {"kind": "truncated-polynomial", "order": 2}},
    "quivers": {
        "A2": {"vertices": [1, 2], "arrows": [["a", 1, 2]]},
        "L3": {"vertices": ["v"], "arrows": [["x", "v", "v"], ["y", "v", "v"], ["z", "v", "v"]]},
    },
    "actions": {
        "sign": {"hopf": "C2", "kind": "group-images", "algebra": "D", "images": {"g": [[1, 0], [0, -1]]}},
    },
    "tasks": [
        {"name": "hopf-axioms", "kind": "verify", "hopf": "H4"},
        {"name": "smash-sign", "kind": "smash", "action": "sign", "indices": [0, 1]},
        {"name": "classify-C2", "kind": "classify", "hopf": "C2", "expect": {"verdict": "CY(0)"}},
        {"name": "wrong-expectation", "kind": "classify", "hopf": "C2", "expect": {"verdict": "none"}},
        {"name": "no-action", "kind": "smash"},
        {"name": "not-skew-cy", "kind": "nakayama", "action": "sign"},
        {"name": "no-augmentation", "kind": "as-check", "action": "sign"},
        {"name": "pi2", "kind": "cy-complete", "quiver": "A2", "n": 2, "truncation": 2},
        {"name": "ginzburg", "kind": "deform", "quiver": "L3", "n": 3, "truncation": 3, "max-degree": 3,
         "potential": [[["x", "y", "z"], 1], [["x", "z", "y"], -1]]},
    ],
}


@pytest.fixture
def workspace():
    return Workspace.from_text(json.dumps(DOCUMENT))


@pytest.fixture
def registry():
    return TaskRegistry()


class TestTaskKinds:
    """Test running individual task kinds."""

    def test_verify(self, registry, workspace):
        """Test the Hopf axioms of H4."""
        report = registry.execute_task(workspace, "hopf-axioms")
        assert report.status == PASS
        assert report.data["hopf"]["dim"] == 4

    def test_smash(self, registry, workspace):
        """Test A♯H with the Δ algebras."""
        report = registry.execute_task(workspace, "smash-sign")
        assert report.passed
        assert report.data["dim"] == 4
        assert report.data["delta_dims"] == {"0": 8, "1": 8}

    def test_expectation_met(self, registry, workspace):
        """Test that a met expectation keeps the task passing."""
        report = registry.execute_task(workspace, "classify-C2")
        assert report.passed
        assert report.checks.get("expect verdict").passed

    def test_expectation_missed(self, registry, workspace):
        """Test that a missed expectation fails the task."""
        report = registry.execute_task(workspace, "wrong-expectation")
        assert report.status == FAIL
        assert report.exit_code == 1
        assert [f["name"] for f in report.failures()] == ["expect verdict"]

    def test_missing_field(self, registry, workspace):
        """Test that a task without its inputs is invalid."""
        report = registry.execute_task(workspace, "no-action")
        assert report.status == INVALID
        assert report.exit_code == 2
        assert "needs action" in report.error

    def test_precondition(self, registry, workspace):
        """Test that a violated precondition is a failure, not an input error."""
        report = registry.execute_task(workspace, "no-augmentation")
        assert report.status == FAIL
        assert report.exit_code == 1
        assert report.error.startswith("PreconditionError")

    def test_nakayama_not_applicable(self, registry, workspace):
        """Test that a base which is not skew-CY is reported with the reason."""
        report = registry.execute_task(workspace, "not-skew-cy")
        assert report.status == PASS
        assert report.data["applicable"] is False
        assert "not skew-Calabi-Yau" in report.data["reason"]
        assert report.checks.get("Nakayama formula").skipped

    def test_cy_complete(self, registry, workspace):
        """Test Π_2 of the quiver 1 -> 2."""
        report = registry.execute_task(workspace, "pi2")
        assert report.passed
        assert report.data["completion"]["dims"] == [3, 8, 21]
        assert "smash" not in report.data

    def test_ginzburg(self, registry, workspace):
        """Test the Ginzburg algebra of three loops with a commutator potential."""
        report = registry.execute_task(workspace, "ginzburg")
        assert report.passed
        assert report.data["h0_dims"] == [1, 3, 6, 10]

    def test_settings_yield_to_task_fields(self, registry, workspace):
        """Test that the task's own truncation wins over run settings."""
        report = registry.execute_task(workspace, "pi2", TaskSettings(truncation=4))
        assert report.data["completion"]["truncation"] == 2


class TestTaskRegistry:
    """Test the registry."""

    def test_kinds(self, registry):
        """Test that every task kind is registered in order."""
        assert registry.get_task_names() == list(TASK_KINDS)
        assert set(registry.get_task_descriptions()) == set(TASK_KINDS)

    def test_instances_are_cached(self, registry):
        """Test that a kind is instantiated once."""
        assert registry.get_task("verify") is registry.get_task("verify")

    def test_unknown_kind(self, registry):
        """Test lookup of an unregistered kind."""
        with pytest.raises(TaskNotFoundError):
            registry.get_task("factor")

    def test_unknown_task(self, registry, workspace):
        """Test running a name the workspace does not declare."""
        with pytest.raises(TaskNotFoundError):
            registry.execute_task(workspace, "missing")

    def test_register(self, registry):
        """Test registering a new kind and refusing duplicates."""

        class EchoTask(BaseTask):
            name = "echo"
            description = "Echo the task name"

            def _execute(self, context):
                return {"task": context.spec.name}, None

        registry.register_task("echo", EchoTask)
        assert registry.get_task("echo").name == "echo"
        with pytest.raises(TaskRegistryError):
            registry.register_task("verify", EchoTask)
        with pytest.raises(TaskRegistryError):
            registry.register_task("other", dict)


class TestRunner:
    """Test task selection and running."""

    def test_select_all(self, workspace):
        """Test that no names selects every task."""
        assert select_tasks(workspace) == workspace.task_names()

    def test_select_keeps_workspace_order(self, workspace):
        """Test that selection follows the document."""
        assert select_tasks(workspace, ["classify-C2", "hopf-axioms"]) == ["hopf-axioms", "classify-C2"]

    def test_select_unknown(self, workspace):
        """Test that unknown names are reported together."""
        with pytest.raises(TaskNotFoundError, match="nope"):
            select_tasks(workspace, ["hopf-axioms", "nope"])

    def test_parallel_order(self, registry, workspace):
        """Test that parallel runs report in workspace order."""
        names = ["hopf-axioms", "smash-sign", "classify-C2"]
        reports = run_tasks(workspace, names, parallel=True, workers=2, registry=registry)
        assert [r.task for r in reports] == names
        assert all(r.passed for r in reports)


class TestTaskReport:
    """Test report serialization."""

    def test_exact_scalars(self):
        """Test that fractions are written as strings."""
        report = TaskReport("t", "verify", PASS, {"value": Fraction(-1, 2)})
        assert json.loads(report.to_json())["data"]["value"] == "-1/2"

    def test_timing_not_serialized(self):
        """Test that two reports differing only in timing serialize identically."""
        first = TaskReport("t", "verify", PASS, {"dim": 4}, execution_time=0.5)
        second = TaskReport("t", "verify", PASS, {"dim": 4}, execution_time=2.0)
        assert first.to_json() == second.to_json()
        assert "execution_time" not in first.to_dict()

    def test_exit_codes(self):
        """Test the exit code of each status."""
        assert TaskReport("t", "verify", PASS).exit_code == 0
        assert TaskReport("t", "verify", FAIL).exit_code == 1
        assert TaskReport("t", "verify", INVALID).exit_code == 2

    def test_overall_status(self):
        """Test the status of a whole run."""
        passing = TaskReport("a", "verify", PASS)
        failing = TaskReport("b", "verify", FAIL)
        invalid = TaskReport("c", "verify", INVALID)
        assert json.loads(reports_to_json([passing]))["status"] == PASS
        assert json.loads(reports_to_json([passing, failing]))["status"] == FAIL
        assert json.loads(reports_to_json([failing, invalid]))["status"] == INVALID

    def test_text_rendering(self):
        """Test the plain-text form."""
        report = TaskReport("t", "classify", FAIL, {"verdict": "none"}, error="boom")
        text = report.render_text()
        assert text.splitlines()[0] == "t [classify]: FAIL"
        assert "  error: boom" in text
        assert '  verdict: "none"' in text
