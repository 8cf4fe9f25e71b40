"""Integration tests running the command line on the shipped workspaces."""

import json

import pytest

from smashcalc.__main__ import main

pytestmark = pytest.mark.integration


@pytest.fixture(autouse=True)
def run_in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def _run_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


class TestCommandLine:
    """Test the smashcalc command end to end."""

    def test_sign_action(self, capsys, workspace_dir):
        """Test every task of the sign action workspace."""
        code, payload = _run_json(capsys, "-w", str(workspace_dir / "sign_action.json"))
        failed = [t["task"] for t in payload["tasks"] if t["status"] != "pass"]
        assert failed == []
        assert payload["status"] == "pass"
        assert code == 0

    def test_sign_action_homology_tasks(self, capsys, workspace_dir):
        """Test the Nakayama, hdet and Artin-Schelter tasks on k[x]/(x²)♯kC2."""
        code, payload = _run_json(capsys, "-w", str(workspace_dir / "sign_action.json"),
                                  "-t", "nakayama-sign", "-t", "nakayama-trivial", "-t", "hdet-sign",
                                  "-t", "as-sign", "-t", "ss-sign", "-t", "ss-sign-trivial")
        assert code == 0
        tasks = {t["task"]: t for t in payload["tasks"]}
        assert set(tasks) == {"nakayama-sign", "nakayama-trivial", "hdet-sign", "as-sign", "ss-sign", "ss-sign-trivial"}
        assert tasks["nakayama-sign"]["data"]["applicable"] is False
        assert tasks["nakayama-trivial"]["data"]["applicable"] is True
        assert tasks["ss-sign-trivial"]["data"]["ext_base"] == [1, 1, 1, 1, 1]
        assert tasks["ss-sign"]["data"]["coefficients"] == "regular"

    def test_selected_tasks(self, capsys, workspace_dir):
        """Test that -t selects tasks and keeps workspace order."""
        code, payload = _run_json(capsys, "-w", str(workspace_dir / "sign_action.json"),
                                  "-t", "classify-C2", "-t", "smash-sign")
        assert code == 0
        assert [t["task"] for t in payload["tasks"]] == ["smash-sign", "classify-C2"]

    @pytest.mark.parametrize("document", ["sign_action.json", "ginzburg.json", "koszul.json", "preprojective.json"])
    def test_deterministic_output(self, capsys, workspace_dir, document):
        """Test that two runs give byte-identical JSON."""
        argv = ["-w", str(workspace_dir / document), "--format", "json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_ginzburg(self, capsys, workspace_dir):
        """Test the Ginzburg workspace against its expectations."""
        code, payload = _run_json(capsys, "-w", str(workspace_dir / "ginzburg.json"))
        assert code == 0
        h0 = {t["task"]: t["data"]["h0_dims"] for t in payload["tasks"]}
        assert h0 == {"gamma3-commutator": [1, 3, 6, 10], "gamma2-jordan": [1, 2, 3, 4]}

    def test_koszul(self, capsys, workspace_dir):
        """Test the polynomial actions of C2."""
        code, payload = _run_json(capsys, "-w", str(workspace_dir / "koszul.json"))
        assert code == 0
        assert payload["status"] == "pass"

    def test_preprojective(self, capsys, workspace_dir):
        """Test Π_2 of A2 and the smash isomorphism for the swap action."""
        code, payload = _run_json(capsys, "-w", str(workspace_dir / "preprojective.json"),
                                  "-t", "pi2-A2", "-t", "iso-swap")
        assert code == 0
        first = payload["tasks"][0]
        assert first["data"]["completion"]["dims"] == [3, 8, 21]

    def test_unknown_task(self, capsys, workspace_dir):
        """Test that an unknown task name is an input error."""
        code = main(["-w", str(workspace_dir / "sign_action.json"), "-t", "nope"])
        assert code == 2

    def test_invalid_workspace(self, capsys, tmp_path):
        """Test the positioned error payload for a broken document."""
        path = tmp_path / "broken.json"
        path.write_text('{"field": "Q",\n "tasks": [{"name": "t", "kind": "factor"}]}', encoding="utf-8")
        code, payload = _run_json(capsys, "-w", str(path))
        assert code == 2
        assert payload["status"] == "invalid"
        assert payload["errors"][0]["position"] == "tasks.0.kind"

    def test_field_override(self, capsys, workspace_dir):
        """Test --field on the command line."""
        code, payload = _run_json(capsys, "-w", str(workspace_dir / "sign_action.json"),
                                  "--field", "Fp:3", "-t", "smash-sign")
        assert code == 0
        assert payload["tasks"][0]["metadata"]["field"] == "Fp:3"

    def test_text_report(self, capsys, workspace_dir):
        """Test the rich table output."""
        code = main(["-w", str(workspace_dir / "sign_action.json"), "-t", "classify-C2"])
        out = capsys.readouterr().out
        assert code == 0
        assert "classify-C2" in out
        assert "CY(0)" in out

    def test_list(self, capsys, workspace_dir):
        """Test --list."""
        code = main(["-w", str(workspace_dir / "preprojective.json"), "--list"])
        assert code == 0
        assert "iso-swap" in capsys.readouterr().out
