"""Unit tests for workspace parsing and object construction."""

import json
import re

import pytest

from smashcalc.tasks import Workspace, WorkspaceError, parse_workspace

SIGN = {
    "smashcalc-version": "1",
    "field": "Q",
    "hopf": {"C2": {"kind": "cyclic", "order": 2}},
    "algebras": {"D": {"kind": "truncated-polynomial", "order": 2}},
    "actions": {
        "sign": {"hopf": "C2", "kind": "group-images", "algebra": "D", "images": {"g": [[1, 0], [0, -1]]}},
    },
    "morphisms": {"flip": {"algebra": "D", "matrix": [[1, 0], [0, -1]]}},
    "bimodules": {"twisted": {"action": "sign", "kind": "twisted", "twist": "flip"}},
    "tasks": [
        {"name": "smash-sign", "kind": "smash", "action": "sign", "indices": [0, 1]},
        {"name": "classify-C2", "kind": "classify", "hopf": "C2"},
    ],
}


def _text(**changes):
    doc = json.loads(json.dumps(SIGN))
    doc.update(changes)
    return json.dumps(doc)


def _positions(text):
    with pytest.raises(WorkspaceError) as exc:
        parse_workspace(text)
    return [where for where, _ in exc.value.entries]


class TestParseWorkspace:
    """Test document validation."""

    def test_valid(self):
        """Test a complete document."""
        doc = parse_workspace(_text())
        assert doc.field_descriptor == "Q"
        assert [t.name for t in doc.tasks] == ["smash-sign", "classify-C2"]
        assert doc.tasks[0].indices == [0, 1]

    def test_empty_document(self):
        """Test that a blank document is an empty workspace."""
        doc = parse_workspace("  \n")
        assert doc.tasks == []
        assert doc.hopf == {}

    def test_syntax_error_position(self):
        """Test that JSON errors carry line:column."""
        positions = _positions('{\n  "field": \n}')
        assert len(positions) == 1
        assert re.fullmatch(r"\d+:\d+", positions[0])

    def test_not_an_object(self):
        """Test that a top-level array is refused at 1:1."""
        assert _positions("[1, 2]") == ["1:1"]

    def test_unknown_task_kind(self):
        """Test that schema errors carry dotted paths."""
        positions = _positions(_text(tasks=[{"name": "t", "kind": "factor"}]))
        assert positions == ["tasks.0.kind"]

    def test_unknown_field(self):
        """Test that unexpected keys are rejected."""
        positions = _positions(_text(extra=1))
        assert positions == ["extra"]

    def test_kind_needs_fields(self):
        """Test that a cyclic Hopf algebra needs its order."""
        positions = _positions(_text(hopf={"C2": {"kind": "cyclic"}}))
        assert positions == ["hopf.C2"]

    def test_unsupported_version(self):
        """Test that only known document versions are accepted."""
        with pytest.raises(WorkspaceError):
            parse_workspace(_text(**{"smashcalc-version": "9"}))

    def test_dangling_reference(self):
        """Test that references to undeclared objects are reported."""
        doc = json.loads(_text())
        doc["actions"]["sign"]["hopf"] = "C3"
        with pytest.raises(WorkspaceError) as exc:
            parse_workspace(json.dumps(doc))
        assert ("actions.sign.hopf", "unknown hopf algebra 'C3'") in exc.value.entries

    def test_matrix_shape(self):
        """Test that images must be square of the algebra's dimension."""
        doc = json.loads(_text())
        doc["actions"]["sign"]["images"]["g"] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert _positions(json.dumps(doc)) == ["actions.sign.images.g"]

    def test_duplicate_task_names(self):
        """Test that task names are unique."""
        tasks = [{"name": "t", "kind": "classify", "hopf": "C2"}] * 2
        assert _positions(_text(tasks=tasks)) == ["tasks[1].name"]

    def test_message_lists_entries(self):
        """Test the error message joins every entry."""
        error = WorkspaceError([("a.b", "first"), ("1:2", "second")])
        assert str(error) == "a.b: first; 1:2: second"


class TestWorkspace:
    """Test building named objects."""

    @pytest.fixture
    def workspace(self):
        return Workspace.from_text(_text(), source="sign.json")

    def test_objects_are_shared(self, workspace):
        """Test that each object is built once."""
        H = workspace.hopf("C2")
        assert H.dim == 2
        assert workspace.hopf("C2") is H
        assert workspace.module_action("sign").hopf is H

    def test_action(self, workspace):
        """Test the group-images action."""
        action = workspace.action("sign")
        assert action.algebra.dim == 2
        assert action.check().passed

    def test_twisted_bimodule(self, workspace):
        """Test a bimodule twisted by a declared morphism."""
        M = workspace.bimodule("twisted")
        assert M.dim == 2
        assert M.check().passed

    def test_task_lookup(self, workspace):
        """Test task access by name."""
        assert workspace.task_names() == ["smash-sign", "classify-C2"]
        assert workspace.task("classify-C2").kind == "classify"
        assert workspace.task("missing") is None

    def test_field_override(self):
        """Test that a field given on construction wins over the document."""
        ws = Workspace.from_text(_text(), field="Fp:3")
        assert ws.field.name == "Fp:3"
        assert ws.hopf("C2").field.characteristic == 3

    def test_bad_field(self):
        """Test that an unknown field descriptor is an input error."""
        with pytest.raises(WorkspaceError) as exc:
            Workspace.from_text(_text(field="R"))
        assert exc.value.entries[0][0] == "field"

    def test_unknown_group_label(self):
        """Test that images must name basis elements of H."""
        doc = json.loads(_text())
        doc["actions"]["sign"]["images"] = {"h": [[1, 0], [0, -1]]}
        ws = Workspace.from_text(json.dumps(doc))
        with pytest.raises(WorkspaceError) as exc:
            ws.action("sign")
        assert exc.value.entries[0][0] == "actions.sign.images"

    def test_invalid_action_still_builds(self):
        """Test that an action failing its axioms builds and fails its check."""
        doc = json.loads(_text())
        doc["actions"]["sign"] = {"hopf": "C2", "kind": "matrices", "algebra": "D",
                                  "operators": [[[1, 0], [0, 1]], [[1, 0], [0, 2]]]}
        ws = Workspace.from_text(json.dumps(doc))
        action = ws.action("sign")
        assert not action.check().passed

    def test_missing_file(self, tmp_path):
        """Test that an unreadable file is an input error."""
        with pytest.raises(WorkspaceError):
            Workspace.from_path(tmp_path / "absent.json")

    def test_shipped_workspaces_parse(self, workspace_dir):
        """Test that every shipped workspace validates."""
        paths = sorted(workspace_dir.glob("*.json"))
        assert paths
        for path in paths:
            ws = Workspace.from_path(path)
            assert ws.task_names()

    def test_augmentation(self, workspace_dir):
        """Test that a declared augmentation reaches the action."""
        ws = Workspace.from_path(workspace_dir / "sign_action.json")
        action = ws.module_action("sign")
        assert action.augmentation == [1, 0]
        assert action.check().get("augmentation ideal stable").passed

    def test_augmentation_length(self):
        """Test that an augmentation needs one value per basis element."""
        doc = json.loads(_text())
        doc["actions"]["sign"]["augmentation"] = [1]
        assert _positions(json.dumps(doc)) == ["actions.sign.augmentation"]
