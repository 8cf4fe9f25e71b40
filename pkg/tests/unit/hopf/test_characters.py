"""Unit tests for characters, winding automorphisms and the σ-condition."""

import pytest

from smashcalc.core import LinearMap
from smashcalc.hopf import Character, CharacterError, check_sigma_condition, sigma_condition_report, winding_left, winding_right


class TestCharacter:
    """Test characters of Hopf algebras."""

    def test_counit_is_character(self, h4):
        """Test that ε is a character."""
        eps = Character.counit(h4)
        assert eps.is_counit()
        assert eps.name == "ε"

    def test_sweedler_sign_character(self, h4, field):
        """Test the character g ↦ -1, x ↦ 0 on H4."""
        alpha = Character(h4, [1, -1, 0, 0], name="α")
        assert alpha(h4.e(1)) == -field.one
        assert not alpha.is_counit()
        assert alpha.to_dict() == {"1": "1", "g": "-1", "x": "0", "gx": "0"}

    def test_non_multiplicative_values_rejected(self, kc2):
        """Test that g ↦ 2 is not a character of kC2."""
        with pytest.raises(CharacterError):
            Character(kc2, [1, 2])

    def test_wrong_length_rejected(self, kc2):
        """Test that the value count must match the dimension."""
        with pytest.raises(CharacterError):
            Character(kc2, [1])

    def test_compose_antipode(self, kc3):
        """Test that the trivial character of kC3 is fixed by the antipode."""
        chi = Character(kc3, [1, 1, 1])
        assert chi.compose_antipode(1) == chi


class TestWinding:
    """Test winding automorphisms."""

    def test_right_winding_on_sweedler(self, h4, field):
        """Test Ξ^r_α(g) = -g and Ξ^r_α(x) = x."""
        alpha = Character(h4, [1, -1, 0, 0], name="α")
        xi = winding_right(h4, alpha)
        assert xi.cols[1] == {1: -field.one}
        assert xi.cols[2] == {2: field.one}
        assert xi.check().passed

    def test_left_winding_by_counit_is_identity(self, h4):
        """Test Ξ^ℓ_ε = id."""
        assert winding_left(h4, Character.counit(h4)).is_identity()


class TestSigmaCondition:
    """Test the σ-condition Δσ = (S^{2i} ⊗ σ)Δ."""

    def test_identity_index_zero(self, h4, field):
        """Test that σ = id satisfies the condition for index 0."""
        assert check_sigma_condition(h4, LinearMap.identity(field, 4), 0)

    def test_identity_index_one_fails_on_sweedler(self, h4, field):
        """Test that σ = id fails for index 1 since S² ≠ id."""
        report = sigma_condition_report(h4, LinearMap.identity(field, 4), 1)
        assert not report.passed

    def test_group_algebra_any_index(self, kc2, field):
        """Test that S² = id makes every index equivalent on kC2."""
        assert check_sigma_condition(kc2, LinearMap.identity(field, 2), 3)
