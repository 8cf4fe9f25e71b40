"""Unit tests for inverse dualising complexes and Calabi-Yau completions."""

import pytest

from smashcalc.core import LinearMap
from smashcalc.cycompletion import (
    CocycleError,
    CompletionError,
    CyclicQuiverError,
    Quiver,
    QuiverAction,
    completed_path_counts,
    completion_smash_iso,
    cy_completion,
    deformed_cocycle_check,
    deformed_completion,
    hereditary_inverse_dualising,
    sigma_star_smash,
    vertex_contraction,
)


@pytest.fixture
def a2():
    return Quiver(["1", "2"], [("a", "1", "2")], name="A2")


@pytest.fixture
def a2_dualising(a2, field):
    return hereditary_inverse_dualising(a2, field)


class TestDualisingComplex:
    """Test D_A for hereditary path algebras."""

    def test_a2(self, a2_dualising):
        """Test the two-term complex for 1 -> 2."""
        D = a2_dualising
        assert D.dim == 8
        assert D.cohomology_dims() == {0: 1, 1: 1}
        assert D.quiver is not None
        assert D.passed

    def test_cyclic_quiver(self, field):
        """Test that an oriented cycle is refused."""
        Q = Quiver(["v"], [("x", "v", "v")], name="J")
        with pytest.raises(CyclicQuiverError):
            hereditary_inverse_dualising(Q, field)

    def test_equivariant(self, kc2, a2):
        """Test D_A carrying the swap action on A2 ⊔ A2."""
        action = QuiverAction.swap(kc2, a2)
        D = hereditary_inverse_dualising(action.quiver, action=action)
        assert D.hopf is kc2
        assert D.dim == 16
        assert D.passed


class TestCompletion:
    """Test truncated Calabi-Yau completions."""

    def test_path_counts(self, a2):
        """Test paths of the completed quiver of 1 -> 2."""
        assert completed_path_counts(a2, 2) == [3, 8, 21]

    def test_preprojective(self, a2, a2_dualising):
        """Test Π_2 of k(1 -> 2) through tensor degree 2."""
        A = a2_dualising.algebra
        Pi = cy_completion(A, a2_dualising, 2, 2)
        assert Pi.dims() == [3, 8, 21]
        assert Pi.name == f"Π_2({A.name})"
        assert Pi.report.passed

    def test_smash_iso(self, kc2, a2):
        """Test Π_2(A)♯kC2 against the completion of A♯kC2 for the swap action."""
        action = QuiverAction.swap(kc2, a2)
        D = hereditary_inverse_dualising(action.quiver, action=action)
        iso = completion_smash_iso(D, 2, truncation=2)
        assert iso.hopf_degree == 0
        assert iso.passed

    def test_zero_deformation(self, a2_dualising):
        """Test that zero vertex weights leave Π_2 undeformed."""
        c = vertex_contraction(a2_dualising, {})
        assert c.is_zero()
        deformed = deformed_completion(a2_dualising, 2, c, truncation=2)
        assert deformed.cocycle.holds
        assert deformed.iso is None
        assert deformed.passed

    def test_cocycle_shape(self, a2_dualising, field):
        """Test that c must map D_A to A."""
        c = LinearMap.zero(field, 2, 3)
        with pytest.raises(CocycleError):
            deformed_completion(a2_dualising, 2, c)

    def test_zero_cocycle(self, a2_dualising):
        """Test that c = 0 satisfies every cocycle condition."""
        c = vertex_contraction(a2_dualising, {})
        verdict = deformed_cocycle_check(c, a2_dualising, 2)
        assert verdict.holds, str(verdict.report)
        assert verdict.witness is None


class TestSigmaStarSmash:
    """Test T_A(D)♯^{σ*}H."""

    @pytest.fixture
    def swap_dualising(self, kc2, a2):
        action = QuiverAction.swap(kc2, a2)
        return hereditary_inverse_dualising(action.quiver, action=action)

    def test_verifies(self, swap_dualising):
        """Test the smash product of Π_2(A2 ⊔ A2) with kC2."""
        Pi = cy_completion(swap_dualising.algebra, swap_dualising, 2, 2)
        smash = sigma_star_smash(Pi, swap_dualising.module)
        assert smash.dims() == [2 * d for d in Pi.dims()]
        assert smash.report.passed, str(smash.report)

    def test_index_zero_refused(self, swap_dualising):
        """Test that only index-1 bimodules generate a σ*-smash."""
        Pi = cy_completion(swap_dualising.algebra, swap_dualising, 2, 2)
        with pytest.raises(CompletionError):
            sigma_star_smash(Pi, swap_dualising.module.with_index(0))
