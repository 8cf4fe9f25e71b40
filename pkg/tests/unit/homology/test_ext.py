"""Unit tests for one-sided Ext, free generators and the comparisons over A♯H."""

import pytest

from smashcalc.core import Bimodule, LinearMap
from smashcalc.homology import (
    HomologyError,
    NotFreeGeneratorError,
    PreconditionError,
    as_smash_check,
    ext_bimodule,
    ext_one_sided,
    find_free_generator,
    nakayama_from_generator,
    skew_group_cy,
    ss_dimension_consistency,
    theta_whdet,
    trivial_module,
    weak_hdet,
)
from smashcalc.smash import ModuleAlgebraAction


class TestExtOneSided:
    """Test Ext over the dual numbers."""

    def test_self_injective(self, dual_numbers, field):
        """Test that Ext^n(k, A) vanishes above degree 0."""
        k = trivial_module(dual_numbers, [field.one, field.zero])
        groups = ext_one_sided(dual_numbers, k, max_degree=3)
        assert groups.dims == [1, 0, 0, 0]
        assert groups.concentrated() == 0

    def test_periodic_into_k(self, dual_numbers, field):
        """Test that Ext^n(k, k) is one-dimensional in every degree."""
        k = trivial_module(dual_numbers, [field.one, field.zero])
        assert ext_one_sided(dual_numbers, k, k, max_degree=3).dims == [1, 1, 1, 1]


class TestNakayamaFromGenerator:
    """Test e·a = μ(a)·e."""

    def test_regular(self, dual_numbers, field):
        """Test that the unit of A gives μ = id."""
        data = nakayama_from_generator(Bimodule.regular(dual_numbers), {0: field.one})
        assert data.mu.is_identity()
        assert data.report.passed, str(data.report)

    def test_twisted(self, dual_numbers, field):
        """Test that the unit of A^μ recovers μ."""
        mu = LinearMap.from_rows(field, [[1, 0], [0, -1]])
        data = nakayama_from_generator(Bimodule.twisted(dual_numbers, mu), {0: field.one}, degree=2)
        assert data.degree == 2
        assert data.mu.cols[1] == {1: -field.one}
        assert data.report.passed

    def test_not_free(self, dual_numbers, field):
        """Test that x generates no free module."""
        with pytest.raises(NotFreeGeneratorError):
            nakayama_from_generator(Bimodule.regular(dual_numbers), {1: field.one})

    def test_scan_finds_unit(self, dual_numbers, field):
        """Test the deterministic generator scan."""
        assert find_free_generator(Bimodule.regular(dual_numbers)) == {0: field.one}


class TestTheta:
    """Test θ(h) = whdet(S²(h₁))#h₂."""

    def test_theta_is_algebra_map(self, sign_action):
        """Test that θ maps kC2 into A♯kC2 multiplicatively."""
        weak = weak_hdet(sign_action, ext_bimodule(sign_action, 0).rung(0))
        theta = theta_whdet(weak)
        assert theta.source.dim == 2
        assert theta.target.dim == 4
        assert theta.check().passed


class TestSkewGroup:
    """Test A♯k⟨μ_A⟩."""

    def test_identity_nakayama(self, kc2):
        """Test that μ_A = id gives the trivial group and a CY smash product."""
        verdict = skew_group_cy(kc2.algebra)
        assert verdict.order == 1
        assert verdict.characteristic_condition
        assert verdict.smash_cy

    def test_swap(self, dual_kc2, field):
        """Test that swapping the idempotents of k × k has order 2 and gives M2(k)."""
        swap = LinearMap.from_rows(field, [[0, 1], [1, 0]])
        verdict = skew_group_cy(dual_kc2.algebra, mu_A=swap)
        assert verdict.order == 2
        assert verdict.smash_cy
        assert verdict.classification.label() == "CY(0)"


class TestArtinSchelter:
    """Test the AS conditions for A, H and A♯H."""

    def test_needs_augmentation(self, kc2, dual_numbers, field):
        """Test that an action without augmentation is refused."""
        g = LinearMap.from_rows(field, [[1, 0], [0, -1]])
        action = ModuleAlgebraAction.from_group_images(kc2, dual_numbers, {1: g})
        with pytest.raises(PreconditionError):
            as_smash_check(action)

    def test_frobenius_pieces(self, sign_action, field):
        """Test that the dual numbers, kC2 and their smash product are AS of dimension 0."""
        result = as_smash_check(sign_action, bound=2)
        assert result.algebra.holds and result.algebra.degree == 0
        assert result.hopf.holds and result.hopf.degree == 0
        assert result.smash.holds and result.smash.degree == 0
        assert result.report.get("dimensions add").passed
        assert result.passed, str(result.report)
        assert result.delta == [field.one, field(-1)]


class TestSpectralDimensions:
    """Test Ext over A♯H against H-invariants of Ext over A."""

    def test_semisimple_collapse(self, sign_action):
        """Test that kC2 is semisimple over Q and the dimensions agree."""
        result = ss_dimension_consistency(sign_action, bound=2)
        assert result.semisimple
        assert result.report.get("Hom_Λ(M, N) = Hom_A(M, N)^H").passed
        assert len(result.smash_dims) == 3
        assert result.passed, str(result.report)
        assert result.coefficients == "regular"

    def test_trivial_coefficients(self, sign_action):
        """Test Ext^q_Λ(k, k) against the invariants of Ext^q_A(k, k) = k in every degree."""
        result = ss_dimension_consistency(sign_action, bound=4, coefficients="trivial")
        assert result.base_dims == [1, 1, 1, 1, 1]
        assert result.invariant_dims == [1, 0, 1, 0, 1]
        assert result.smash_dims == [1, 0, 1, 0, 1]
        assert result.free_dims is None
        assert result.coefficients == "trivial"
        assert result.passed, str(result.report)

    def test_unknown_coefficients(self, sign_action):
        """Test that only regular and trivial coefficients are accepted."""
        with pytest.raises(HomologyError):
            ss_dimension_consistency(sign_action, bound=1, coefficients="adjoint")
