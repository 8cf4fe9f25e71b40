"""Unit tests for module-algebra actions."""

import pytest

from smashcalc.core import FinDimAlgebra, LinearMap
from smashcalc.smash import ActionError, ModuleAlgebraAction, check_module_algebra


class TestModuleAlgebraAction:
    """Test construction and verification of actions."""

    def test_sign_action_is_module_algebra(self, sign_action):
        """Test that g ⇀ x = -x makes k[x]/(x^2) a kC2-module algebra."""
        report = check_module_algebra(sign_action)
        assert report.passed, str(report)
        assert report.get("augmentation ideal stable").passed

    def test_group_images_fill_the_group(self, kc3, field):
        """Test that the image of a generator determines every element of C3."""
        A = FinDimAlgebra.ground(field)
        action = ModuleAlgebraAction.from_group_images(kc3, A, {1: LinearMap.identity(field, 1)})
        assert len(action.operators) == 3
        assert action.is_trivial()

    def test_non_involutive_image_fails_associativity(self, kc2, dual_numbers, field):
        """Test that g ⇀ x = 2x is not a kC2-action since g^2 = 1."""
        g = LinearMap.from_rows(field, [[1, 0], [0, 2]])
        action = ModuleAlgebraAction.from_group_images(kc2, dual_numbers, {1: g})
        report = action.check()
        assert not report.passed
        assert not report.get("module associativity").passed
        with pytest.raises(ActionError):
            action.validate()

    def test_group_images_need_a_group_algebra(self, h4, dual_numbers, field):
        """Test that Sweedler's algebra is not accepted as a group algebra."""
        with pytest.raises(ActionError):
            ModuleAlgebraAction.from_group_images(h4, dual_numbers, {1: LinearMap.identity(field, 2)})

    def test_operator_count_checked(self, kc2, dual_numbers, field):
        """Test that one matrix per basis element of H is required."""
        with pytest.raises(ActionError):
            ModuleAlgebraAction(kc2, dual_numbers, [LinearMap.identity(field, 2)])

    def test_invariants(self, sign_action):
        """Test that the invariants of the sign action are the scalars."""
        fixed = sign_action.invariants()
        assert fixed.dim == 1
        assert {0: sign_action.field.one} in fixed

    def test_trivial_action_of_sweedler(self, h4, dual_numbers):
        """Test that H4 acting through its counit is a module algebra."""
        action = ModuleAlgebraAction.trivial(h4, dual_numbers)
        assert action.is_trivial()
        assert action.check().passed

    def test_enveloping_action(self, sign_action):
        """Test that H^e acts on A^e."""
        action = sign_action.enveloping()
        assert action.hopf.dim == 4
        assert action.algebra.dim == 4
        assert action.check().passed
