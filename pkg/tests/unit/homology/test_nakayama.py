"""Unit tests for Nakayama automorphisms, integrals and classification."""

import pytest

from smashcalc.core import Bimodule, FinDimAlgebra, LinearMap
from smashcalc.homology import (
    PreconditionError,
    bimodule_ext,
    classify_algebra,
    classify_hopf,
    cy_smash_check,
    ext_bimodule,
    find_free_generator,
    homological_integral,
    is_frobenius,
    nakayama_smash,
    weak_hdet,
)
from smashcalc.homology.nakayama import is_free_generator
from smashcalc.smash import ModuleAlgebraAction, smash_product


@pytest.fixture
def swap_action(kc2, dual_kc2, field):
    """kC2 swapping the idempotents of k × k."""
    swap = LinearMap.from_rows(field, [[0, 1], [1, 0]])
    return ModuleAlgebraAction.from_group_images(kc2, dual_kc2.algebra, {1: swap}, name="swap")


class TestClassifyAlgebra:
    """Test the CY / skew-CY / VdB classification."""

    def test_ground_field_is_cy(self, field):
        """Test that k is CY(0)."""
        result = classify_algebra(FinDimAlgebra.ground(field))
        assert result.label() == "CY(0)"

    def test_group_algebra_is_cy(self, kc2):
        """Test that kC2 over Q is CY(0) with trivial Nakayama automorphism."""
        result = classify_algebra(kc2.algebra)
        assert result.label() == "CY(0)"
        assert result.nakayama.mu.is_identity()
        assert result.report.passed

    def test_dual_numbers_not_smooth(self, dual_numbers):
        """Test that k[x]/(x^2) is not smooth yet carries its Frobenius Nakayama automorphism."""
        result = classify_algebra(dual_numbers, bound=4)
        assert result.label() == "none (NotSmoothPeriodic)"
        assert result.frobenius
        assert result.has_nakayama
        assert result.nakayama.mu.is_identity()

    def test_frobenius(self, dual_numbers, h4):
        """Test the Frobenius property of self-injective examples."""
        assert is_frobenius(dual_numbers)
        assert is_frobenius(h4.algebra)


class TestHopfIntegrals:
    """Test homological integrals and the Hopf classification."""

    def test_group_algebra_unimodular(self, kc2):
        """Test that ∫ℓ = ε for kC2."""
        integral = homological_integral(kc2)
        assert integral.degree == 0
        assert integral.left.is_counit()
        assert integral.report.passed

    def test_sweedler_not_unimodular(self, h4, field):
        """Test that H4 acts on its left integrals through g ↦ -1."""
        integral = homological_integral(h4)
        assert integral.degree == 0
        assert not integral.left.is_counit()
        assert integral.left.values[1] == -field.one
        assert integral.report.passed

    def test_classify_group_algebra(self, kc2):
        """Test that kC2 is CY(0)."""
        result = classify_hopf(kc2)
        assert result.label() == "CY(0)"
        assert result.passed

    def test_classify_sweedler(self, h4):
        """Test that H4 is not smooth and μ_H matches the direct Nakayama automorphism."""
        result = classify_hopf(h4, bound=4)
        assert result.label() == "none (NotSmoothPeriodic)"
        assert result.comparison is not None


class TestHdet:
    """Test weak homological determinants."""

    def test_sign_action_whdet(self, sign_action):
        """Test the defining identities of the weak hdet for the sign action."""
        weak = weak_hdet(sign_action, ext_bimodule(sign_action, 0).rung(0))
        assert weak.report.passed, str(weak.report)
        assert weak.whdet.shape == (2, 2)

    def test_index_zero_rung_refused(self, sign_action):
        """Test that only index-1 rungs are accepted."""
        rung = ext_bimodule(sign_action, 0).rung(0).with_index(0)
        with pytest.raises(PreconditionError):
            weak_hdet(sign_action, rung)


class TestSmashTheorems:
    """Test the Nakayama formula and the CY criterion for smash products."""

    def test_nakayama_needs_skew_cy_base(self, sign_action):
        """Test that a non-smooth base is refused."""
        with pytest.raises(PreconditionError):
            nakayama_smash(sign_action, bound=4)

    def test_nakayama_formula_trivial_action(self, kc2, field):
        """Test μ_Λ for kC2 acting trivially on k."""
        action = ModuleAlgebraAction.trivial(kc2, FinDimAlgebra.ground(field))
        record = nakayama_smash(action)
        assert record.passed, str(record.report)

    def test_cy_criterion_swap(self, swap_action):
        """Test that (k × k)♯kC2 ≅ M2(k) is CY and the conditions agree."""
        verdict = cy_smash_check(swap_action)
        assert verdict.smash_cy is True
        assert verdict.consistent is True

    def test_nakayama_formula_swap(self, swap_action):
        """Test μ_Λ for kC2 swapping the idempotents of k × k."""
        record = nakayama_smash(swap_action)
        assert record.passed, str(record.report)
        assert record.witness is not None

    def test_nakayama_formula_kc3_base(self, kc2, kc3):
        """Test μ_Λ for kC2 acting trivially on kC3, a six-dimensional smash product."""
        action = ModuleAlgebraAction.trivial(kc2, kc3.algebra)
        record = nakayama_smash(action)
        assert record.passed, str(record.report)


class TestFreeGenerator:
    """Test the search for free generators of rank-one rungs."""

    def test_regular_bimodule(self, kc2):
        """Test that the unit generates A freely."""
        rung = Bimodule.regular(kc2.algebra)
        e = find_free_generator(rung)
        assert e is not None
        assert is_free_generator(rung, e)

    def test_top_rung_of_six_dimensional_smash(self, kc2, kc3):
        """Test that Hom_{Λe}(Λ, Λe) of kC3♯kC2 has a free generator."""
        smash = smash_product(ModuleAlgebraAction.trivial(kc2, kc3.algebra))
        rung = bimodule_ext(smash.algebra, 0).rung(0)
        assert rung.dim == 6
        e = find_free_generator(rung)
        assert e is not None
        assert is_free_generator(rung, e)

    def test_wrong_dimension(self, kc2, field):
        """Test that a rung of the wrong dimension has no free generator."""
        rung = Bimodule.regular(kc2.algebra).direct_sum(Bimodule.regular(kc2.algebra))
        assert find_free_generator(rung) is None

