"""Unit tests for duals and tensor products of equivariant bimodules."""

import pytest

from smashcalc.core import LinearMap
from smashcalc.equivariant import (
    LEFT,
    RIGHT,
    EquivariantBimodule,
    IndexMismatchError,
    check_equivariant,
    double_dual_evaluation,
    equivariant_dual,
    tensor_equivariant,
)
from smashcalc.smash import ModuleAlgebraAction


@pytest.fixture
def regular(sign_action):
    return EquivariantBimodule.regular(sign_action)


class TestEquivariantDual:
    """Test Hom_A(D, A) with its induced H-action."""

    def test_left_dual_of_regular(self, regular):
        """Test that Hom_A(A, A) is two-dimensional and equivariant."""
        dual = equivariant_dual(regular, LEFT)
        assert dual.dim == 2
        assert dual.index == 0
        report = dual.check()
        assert report.passed, str(report)

    def test_right_dual_of_regular(self, regular):
        """Test the dual over A^op."""
        dual = equivariant_dual(regular, RIGHT)
        assert dual.dim == 2
        assert dual.side == RIGHT
        assert dual.check().passed

    def test_double_dual_evaluation_bijective(self, regular):
        """Test that A is reflexive."""
        assert double_dual_evaluation(regular).is_bijective()


class TestEquivariantTensor:
    """Test D ⊗_A D'."""

    def test_regular_tensor(self, regular):
        """Test A ⊗_A A ≅ A with a well-defined H-action."""
        tensor = tensor_equivariant(regular, regular)
        assert tensor.dim == 2
        assert tensor.index == 0
        report = tensor.check()
        assert report.passed, str(report)
        assert report.get("H-action well defined on the quotient").passed

    def test_different_actions_refused(self, regular, kc2, dual_numbers, field):
        """Test that factors must share one action."""
        g = LinearMap.from_rows(field, [[1, 0], [0, -1]])
        other = ModuleAlgebraAction.from_group_images(kc2, dual_numbers, {1: g}, name="sign'")
        with pytest.raises(IndexMismatchError):
            tensor_equivariant(regular, EquivariantBimodule.regular(other))

    def test_check_equivariant(self, regular):
        """Test the free-standing check at the stored index."""
        assert check_equivariant(regular).passed
