"""Unit tests for quivers, path algebras and quiver actions."""

import pytest

from smashcalc.cycompletion import CompletionError, Quiver, QuiverAction, path_algebra


@pytest.fixture
def a2():
    return Quiver(["1", "2"], [("a", "1", "2")], name="A2")


class TestQuiver:
    """Test the quiver graph."""

    def test_acyclic(self, a2):
        """Test acyclicity and the longest path."""
        assert a2.is_acyclic
        assert a2.longest_path_length() == 1

    def test_jordan_quiver_is_cyclic(self):
        """Test that a loop is an oriented cycle."""
        Q = Quiver(["v"], [("x", "v", "v")])
        assert not Q.is_acyclic
        assert Q.longest_path_length() is None

    def test_paths(self, a2):
        """Test the path order: trivial paths first."""
        labels = [a2.path_label(p) for p in a2.paths(3)]
        assert labels == ["e1", "e2", "a"]

    def test_duplicate_arrow(self):
        """Test that arrow names must be unique."""
        with pytest.raises(CompletionError):
            Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])

    def test_unknown_vertex(self):
        """Test that arrows must join declared vertices."""
        with pytest.raises(CompletionError):
            Quiver(["1"], [("a", "1", "2")])

    def test_from_dict(self):
        """Test the workspace form of a quiver."""
        Q = Quiver.from_dict({"vertices": [1, 2, 3], "arrows": [["a", 1, 2], ["b", 2, 3]], "name": "A3"})
        assert Q.name == "A3"
        assert Q.longest_path_length() == 2
        assert Q.to_dict()["acyclic"] is True

    def test_double(self, a2):
        """Test the doubled quiver."""
        doubled = a2.double()
        assert [a.name for a in doubled.arrows] == ["a", "a*"]
        assert not doubled.is_acyclic


class TestPathAlgebra:
    """Test kQ."""

    def test_exact_path_algebra(self, a2, field):
        """Test k(1 -> 2) as a three-dimensional algebra."""
        A = path_algebra(a2, field)
        assert A.dim == 3
        assert A.truncation is None
        assert A.check().passed

    def test_truncated_path_algebra(self, field):
        """Test that a cyclic quiver is cut at the configured bound."""
        Q = Quiver(["v"], [("x", "v", "v")], name="J")
        A = path_algebra(Q, field, 3)
        assert A.dim == 4
        assert A.truncation == 3
        assert A.name == "kJ≤3"


class TestQuiverAction:
    """Test group actions through quiver automorphisms."""

    def test_swap(self, kc2, a2):
        """Test kC2 exchanging the two copies of A2 ⊔ A2."""
        action = QuiverAction.swap(kc2, a2)
        assert len(action.quiver.vertices) == 4
        assert action.act_vertex(1, 0) == 2
        assert action.module_algebra_action().check().passed

    def test_not_an_automorphism(self, kc2, a2):
        """Test that swapping the endpoints of an arrow is refused."""
        with pytest.raises(CompletionError):
            QuiverAction(kc2, a2, {1: {"1": "2", "2": "1"}}, {})

    def test_needs_group_algebra(self, h4, a2):
        """Test that H4 cannot act by quiver automorphisms."""
        with pytest.raises(CompletionError):
            QuiverAction.trivial(h4, a2)
