"""Unit tests for Ginzburg dg algebras."""

import pytest

from smashcalc.cycompletion import CompletionError, GinzburgAlgebra, Quiver


@pytest.fixture
def three_loops():
    return Quiver(["v"], [("x", "v", "v"), ("y", "v", "v"), ("z", "v", "v")], name="L3")


class TestGinzburgAlgebra:
    """Test Γ_n(Q, W)."""

    def test_commutator_potential(self, three_loops, field):
        """Test W = xyz - xzy: H^0 is the polynomial ring in three variables."""
        G = GinzburgAlgebra(three_loops, field, {("x", "y", "z"): 1, ("x", "z", "y"): -1}, n=3, length=3)
        assert G.check().passed
        assert G.degree_zero_dims(3) == [1, 3, 6, 10]

    def test_jordan_quiver(self, field):
        """Test the Jordan quiver at n = 2 without a potential."""
        Q = Quiver(["v"], [("x", "v", "v")], name="J")
        G = GinzburgAlgebra(Q, field, n=2, length=3)
        assert G.name == "Γ_2(J)"
        assert G.check().passed
        assert G.degree_zero_dims(3) == [1, 2, 3, 4]

    def test_potential_not_a_cycle(self, field):
        """Test that a potential term must close up."""
        Q = Quiver(["1", "2"], [("a", "1", "2")], name="A2")
        with pytest.raises(CompletionError):
            GinzburgAlgebra(Q, field, {("a",): 1})

    def test_potential_needs_low_dimension(self, three_loops, field):
        """Test that a potential is refused for n = 4."""
        with pytest.raises(CompletionError):
            GinzburgAlgebra(three_loops, field, {("x", "y", "z"): 1}, n=4)
