"""Unit tests for check reports."""

from smashcalc.core import AxiomCheck, CheckReport


class TestCheckReport:
    """Test recording, sweeping and merging checks."""

    def test_sweep_stops_at_first_failure(self):
        """Test that the first failing tuple is the witness."""
        report = CheckReport("numbers")
        check = report.sweep("small", ((i,) for i in range(10)), lambda i: i < 3)
        assert not check.passed
        assert check.witness == (3,)
        assert check.checked == 4
        assert not report.passed

    def test_sweep_counts_all_tuples_when_passing(self):
        """Test the tuple count of a passing sweep."""
        report = CheckReport("numbers")
        check = report.sweep("nonnegative", ((i,) for i in range(5)), lambda i: i >= 0)
        assert check.passed and check.checked == 5
        assert report.passed

    def test_skip_does_not_fail(self):
        """Test that skipped checks keep the report passing."""
        report = CheckReport("x")
        report.skip("later", "needs a bigger bound")
        assert report.passed
        assert report.to_dict()["checks"][0]["skipped"] is True

    def test_extend_prefixes_names(self):
        """Test merging reports under a prefix."""
        inner = CheckReport("inner")
        inner.record("unit", True)
        outer = CheckReport("outer").extend(inner, prefix="A ")
        assert outer.get("A unit") is not None
        assert outer.get("unit") is None

    def test_failures_and_text(self):
        """Test failure listing and the text rendering."""
        report = CheckReport("s")
        report.record("good", True)
        report.record("bad", False, detail="off by one", witness=(1, 2))
        assert [c.name for c in report.failures()] == ["bad"]
        text = str(report)
        assert "s: FAIL" in text
        assert "[FAIL] bad (1) witness=(1, 2) off by one" in text

    def test_axiom_check_dict(self):
        """Test that witnesses serialise as strings."""
        data = AxiomCheck("c", False, 2, witness=(0, "x")).to_dict()
        assert data == {"name": "c", "passed": False, "checked": 2, "witness": ["0", "x"]}
