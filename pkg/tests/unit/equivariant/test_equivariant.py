"""Unit tests for equivariant bimodules and their smash bimodules."""

import pytest

from smashcalc.core import Bimodule, LinearMap
from smashcalc.equivariant import (
    EquivariantBimodule,
    SigmaConditionError,
    check_invertible_bimodule,
    flip_smash,
    invertibility_transfer,
    smash_bimodule,
    tensor_smash_iso,
)
from smashcalc.hopf import check_sigma_condition
from smashcalc.smash import ModuleAlgebraAction


@pytest.fixture
def regular(sign_action):
    return EquivariantBimodule.regular(sign_action)


@pytest.fixture
def identity_sigma(kc2, field):
    return LinearMap.identity(field, kc2.dim)


class TestEquivariantBimodule:
    """Test the index-i equivariance law."""

    def test_regular_bimodule(self, regular):
        """Test that A with the defining action is equivariant."""
        report = regular.check()
        assert report.passed, str(report)

    def test_twisted_by_commuting_automorphism(self, sign_action, field):
        """Test A^μ for μ = x ↦ -x, which commutes with the action."""
        mu = LinearMap.from_rows(field, [[1, 0], [0, -1]])
        D = EquivariantBimodule.twisted(sign_action, mu)
        assert D.check().passed

    def test_trivial_sweedler_action_any_index(self, h4, dual_numbers):
        """Test that ε∘S² = ε makes the trivial action equivariant at index 1."""
        action = ModuleAlgebraAction.trivial(h4, dual_numbers)
        assert EquivariantBimodule.regular(action, index=1).check().passed

    def test_direct_sum(self, regular):
        """Test that direct sums stay equivariant."""
        total = regular.direct_sum(regular)
        assert total.dim == 4
        assert total.check().passed


class TestInvertibility:
    """Test invertibility of bimodules."""

    def test_regular_is_invertible(self, dual_numbers):
        """Test that A is an invertible A-bimodule."""
        verdict = check_invertible_bimodule(Bimodule.regular(dual_numbers))
        assert verdict.invertible
        assert verdict.report.passed

    def test_double_is_not_invertible(self, dual_numbers):
        """Test that A ⊕ A is not invertible."""
        A = Bimodule.regular(dual_numbers)
        verdict = check_invertible_bimodule(A.direct_sum(A))
        assert not verdict.invertible
        assert verdict.inverse is None

    def test_transfer_to_smash(self, regular, identity_sigma):
        """Test that A and A♯H are both invertible."""
        verdict = invertibility_transfer(regular, identity_sigma)
        assert verdict.bimodule_invertible
        assert verdict.smash_invertible
        assert verdict.agree


class TestSmashBimodule:
    """Test D♯^σH."""

    def test_smash_bimodule_verifies(self, regular, identity_sigma):
        """Test the Λ-bimodule axioms and the rewriting identity."""
        M = smash_bimodule(regular, identity_sigma)
        assert M.dim == 4
        report = M.verify()
        assert report.passed, str(report)

    def test_sigma_condition_enforced(self, h4, dual_numbers, field):
        """Test that σ = id is refused at index 1 over H4."""
        action = ModuleAlgebraAction.trivial(h4, dual_numbers)
        D = EquivariantBimodule.regular(action, index=1)
        with pytest.raises(SigmaConditionError):
            smash_bimodule(D, LinearMap.identity(field, 4))

    def test_flip(self, regular, identity_sigma):
        """Test D♯^σH ≅ H^{σ⁻¹}♯D."""
        result = flip_smash(regular, identity_sigma)
        assert result.passed, str(result.report)

    def test_tensor_iso(self, regular, identity_sigma):
        """Test (D♯H) ⊗_Λ (D'♯H) ≅ (D ⊗_A D')♯H."""
        result = tensor_smash_iso(regular, identity_sigma, regular, identity_sigma)
        assert result.passed, str(result.report)
        assert result.source.dim == result.target.dim == 4


@pytest.fixture
def sign_sigma(field):
    """h ↦ h_1 π(h_2) for the sign character π(g) = -1."""
    return LinearMap.from_rows(field, [[1, 0], [0, -1]])


@pytest.fixture
def swap_action(kc2, dual_kc2, field):
    swap = LinearMap.from_rows(field, [[0, 1], [1, 0]])
    return ModuleAlgebraAction.from_group_images(kc2, dual_kc2.algebra, {1: swap}, name="swap")


def _diagonal(field, *entries):
    return LinearMap.from_rows(field, [[x if i == j else 0 for j in range(len(entries))]
                                       for i, x in enumerate(entries)])


TRANSFER_CASES = {
    "regular": (lambda f, s, w, t: EquivariantBimodule.regular(s), True),
    "twisted by -1": (lambda f, s, w, t: EquivariantBimodule.twisted(s, _diagonal(f, 1, -1)), True),
    "twisted by 2": (lambda f, s, w, t: EquivariantBimodule.twisted(s, _diagonal(f, 1, 2)), True),
    "twisted by 1/3": (lambda f, s, w, t: EquivariantBimodule.twisted(s, _diagonal(f, 1, "1/3")), True),
    "double": (lambda f, s, w, t: EquivariantBimodule.regular(s).direct_sum(EquivariantBimodule.regular(s)), False),
    "double twisted": (
        lambda f, s, w, t: EquivariantBimodule.regular(s).direct_sum(EquivariantBimodule.twisted(s, _diagonal(f, 1, -1))),
        False,
    ),
    "swap regular": (lambda f, s, w, t: EquivariantBimodule.regular(w), True),
    "swap twisted": (lambda f, s, w, t: EquivariantBimodule.twisted(w, LinearMap.from_rows(f, [[0, 1], [1, 0]])), True),
    "swap double": (lambda f, s, w, t: EquivariantBimodule.regular(w).direct_sum(EquivariantBimodule.regular(w)), False),
    "trivial action": (lambda f, s, w, t: EquivariantBimodule.regular(t), True),
    "trivial action twisted": (lambda f, s, w, t: EquivariantBimodule.twisted(t, _diagonal(f, 1, 5)), True),
}


class TestInvertibilityTransfer:
    """Test that D and D♯^σH are invertible together."""

    @pytest.mark.parametrize("twist", ["identity", "sign"])
    @pytest.mark.parametrize("case", sorted(TRANSFER_CASES))
    def test_verdicts_agree(self, case, twist, field, kc2, dual_numbers, sign_action, swap_action,
                            identity_sigma, sign_sigma):
        """Test both verdicts on regular, twisted and non-invertible bimodules."""
        build, expected = TRANSFER_CASES[case]
        trivial = ModuleAlgebraAction.trivial(kc2, dual_numbers)
        D = build(field, sign_action, swap_action, trivial)
        sigma = identity_sigma if twist == "identity" else sign_sigma
        verdict = invertibility_transfer(D, sigma)
        assert verdict.agree
        assert verdict.bimodule_invertible is expected


class TestNonTrivialSigma:
    """Test smash bimodules for σ ≠ id and twisted D."""

    def test_sigma_condition_holds(self, kc2, sign_sigma):
        """Test the coproduct condition for the sign winding at index 0."""
        assert check_sigma_condition(kc2, sign_sigma, 0)

    def test_smash_bimodule_verifies(self, sign_action, sign_sigma, field):
        """Test the Λ-bimodule axioms for A^μ♯^σH."""
        D = EquivariantBimodule.twisted(sign_action, _diagonal(field, 1, -1))
        report = smash_bimodule(D, sign_sigma).verify()
        assert report.passed, str(report)

    def test_flip_regular(self, regular, sign_sigma):
        """Test D♯^σH ≅ H^{σ⁻¹}♯D for the sign winding."""
        result = flip_smash(regular, sign_sigma)
        assert result.passed, str(result.report)

    def test_flip_twisted(self, sign_action, sign_sigma, field):
        """Test the flip on A^μ with μ = x ↦ 2x."""
        D = EquivariantBimodule.twisted(sign_action, _diagonal(field, 1, 2))
        result = flip_smash(D, sign_sigma)
        assert result.passed, str(result.report)

    def test_tensor_iso_mixed(self, regular, sign_action, sign_sigma, identity_sigma, field):
        """Test (A^μ♯^σH) ⊗_Λ (A♯H) ≅ (A^μ ⊗_A A)♯^σH."""
        D = EquivariantBimodule.twisted(sign_action, _diagonal(field, 1, -1))
        result = tensor_smash_iso(D, sign_sigma, regular, identity_sigma)
        assert result.passed, str(result.report)
        assert result.source.dim == result.target.dim == 4

    def test_tensor_iso_both_twisted(self, sign_action, sign_sigma, field):
        """Test the tensor isomorphism when τσ = id."""
        D = EquivariantBimodule.twisted(sign_action, _diagonal(field, 1, 2))
        D2 = EquivariantBimodule.twisted(sign_action, _diagonal(field, 1, -1))
        result = tensor_smash_iso(D, sign_sigma, D2, sign_sigma)
        assert result.passed, str(result.report)

    def test_tensor_iso_swap(self, swap_action, sign_sigma):
        """Test the tensor isomorphism over (k × k)♯kC2."""
        D = EquivariantBimodule.regular(swap_action)
        result = tensor_smash_iso(D, sign_sigma, D, sign_sigma)
        assert result.passed, str(result.report)
