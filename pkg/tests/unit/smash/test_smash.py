"""Unit tests for smash products, the Δ_i algebras and the identity suite."""

import pytest

from smashcalc.core import LinearMap
from smashcalc.smash import (
    ActionError,
    IdentityContext,
    ModuleAlgebraAction,
    base_as_smash_module,
    delta_algebra,
    delta_embedding,
    smash_product,
    twist_automorphism,
    verify_identities,
)


@pytest.fixture
def sign_smash(sign_action):
    return smash_product(sign_action)


class TestSmashProduct:
    """Test A♯H."""

    def test_basis_and_dimension(self, sign_smash):
        """Test the a#h basis of k[x]/(x^2)♯kC2."""
        assert sign_smash.dim == 4
        assert sign_smash.algebra.labels == ["1", "g", "x", "x#g"]

    def test_verifies(self, sign_smash):
        """Test associativity, embeddings and the commutation law."""
        report = sign_smash.verify()
        assert report.passed, str(report)

    def test_commutation_sign(self, sign_smash, field):
        """Test g·x = -x#g."""
        g = sign_smash.embed_hopf.cols[1]
        x = sign_smash.embed_base.cols[1]
        assert sign_smash.product(g, x) == {sign_smash.index(1, 1): -field.one}
        assert sign_smash.product(x, g) == {sign_smash.index(1, 1): field.one}

    def test_trivial_action_gives_tensor_product(self, kc2, dual_numbers):
        """Test that a trivial action makes A♯H commutative for commutative A and H."""
        smash = smash_product(ModuleAlgebraAction.trivial(kc2, dual_numbers))
        assert smash.algebra.is_commutative()

    def test_sign_smash_not_commutative(self, sign_smash):
        """Test that the sign action breaks commutativity."""
        assert not sign_smash.algebra.is_commutative()

    def test_rejects_invalid_action(self, kc2, dual_numbers, field):
        """Test that a non-action is refused."""
        g = LinearMap.from_rows(field, [[1, 0], [0, 2]])
        action = ModuleAlgebraAction.from_group_images(kc2, dual_numbers, {1: g})
        with pytest.raises(ActionError):
            smash_product(action)

    def test_base_is_smash_module(self, sign_smash):
        """Test that A is a left A♯H-module."""
        assert base_as_smash_module(sign_smash).check().passed

    def test_sweedler_trivial_action(self, h4, dual_numbers):
        """Test the smash product with a non-cocommutative Hopf algebra."""
        smash = smash_product(ModuleAlgebraAction.trivial(h4, dual_numbers))
        assert smash.dim == 8
        assert smash.verify().passed


class TestDeltaAlgebras:
    """Test Δ_i and its embedding into Λ^e."""

    @pytest.mark.parametrize("i", [0, 1])
    def test_delta_verifies(self, sign_action, i):
        """Test the Δ_i relations for the sign action."""
        delta = delta_algebra(sign_action, i)
        assert delta.dim == 8
        report = delta.verify()
        assert report.passed, str(report)

    def test_delta_embedding(self, sign_action, sign_smash):
        """Test that Δ0 embeds into Λ^e with a retraction."""
        embedding = delta_embedding(delta_algebra(sign_action, 0), sign_smash)
        assert embedding.passed, str(embedding.report)
        assert embedding.morphism.rank() == 8


class TestIdentities:
    """Test the identity suite."""

    def test_sign_action_identities(self, sign_action):
        """Test every identity for k[x]/(x^2)♯kC2."""
        report = verify_identities(sign_action)
        assert report.passed, str(report)

    def test_twist_by_identity(self, sign_action, kc2, field):
        """Test that σ = id gives the identity twist."""
        context = IdentityContext.build(sign_action)
        phi = twist_automorphism(context.smash, LinearMap.identity(field, kc2.dim), 0)
        assert phi.is_identity()
        report = verify_identities(sign_action, indices=[], sigma=LinearMap.identity(field, 2), context=context)
        assert report.get("twist automorphism bijective").passed
