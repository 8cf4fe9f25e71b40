"""Unit tests for Hopf algebras and the standard library of examples."""

import pytest

from smashcalc.core import LinearMap
from smashcalc.core.exceptions import NotInvertibleError
from smashcalc.hopf import (
    HopfAlgebra,
    HopfError,
    antipode_power,
    conjugation,
    group_algebra,
    inner_witness,
    is_inner_by,
    matrix_group,
    matrix_group_algebra,
    sweedler,
    verify_hopf,
)


class TestHopfAxioms:
    """Test the Hopf axioms on the example corpus."""

    @pytest.mark.parametrize("name", ["kc2", "kc3", "dual_kc2", "h4", "ground_hopf"])
    def test_examples_are_hopf(self, name, request):
        """Test that every library example satisfies all axioms."""
        H = request.getfixturevalue(name)
        report = verify_hopf(H)
        assert report.passed, str(report)

    def test_broken_antipode_detected(self, kc2, field):
        """Test that S = 0 fails the antipode axiom."""
        bad = HopfAlgebra(kc2.algebra, kc2.comul, kc2.counit, LinearMap.zero(field, 2, 2), name="bad")
        report = bad.verify()
        assert not report.get("antipode").passed
        assert report.get("antipode").witness == (1,)
        with pytest.raises(NotInvertibleError):
            bad.antipode_power(-1)

    def test_tensor_and_op(self, kc2, h4):
        """Test that tensor products and opposites stay Hopf algebras."""
        assert kc2.tensor(kc2).verify().passed
        assert h4.op().verify().passed
        assert kc2.tensor(kc2).dim == 4

    def test_cocommutativity(self, kc3, h4):
        """Test that group algebras are cocommutative and H4 is not."""
        assert kc3.is_cocommutative()
        assert not h4.is_cocommutative()

    def test_sweedler_components(self, h4, field):
        """Test Δ(x) = x⊗1 + g⊗x in sorted Sweedler order."""
        components = sweedler(h4, h4.e(2), 2)
        assert [legs for _, legs in components] == [(1, 2), (2, 0)]


class TestAntipode:
    """Test antipode powers and inner witnesses."""

    def test_group_algebra_involutive(self, kc3):
        """Test that S² = id on a group algebra."""
        assert kc3.antipode_power(2).is_identity()

    def test_sweedler_square_is_conjugation_by_g(self, h4, field):
        """Test S² = conjugation by g and S⁴ = id on H4."""
        g = {1: field.one}
        S2 = h4.antipode_power(2)
        assert S2 == conjugation(h4.algebra, g)
        assert is_inner_by(h4, S2, g)
        assert h4.antipode_power(4).is_identity()

    def test_inner_witness_found(self, h4):
        """Test that the witness for S² really conjugates."""
        S2 = h4.antipode_power(2)
        u = inner_witness(h4, S2)
        assert u is not None
        assert is_inner_by(h4, S2, u)

    def test_antipode_power_is_anti_morphism(self, h4):
        """Test that S is an anti-automorphism and S² an automorphism."""
        assert antipode_power(h4, 1).check_anti().passed
        assert antipode_power(h4, 2).check().passed

    def test_negative_power(self, h4):
        """Test S^-1∘S = id."""
        assert h4.antipode_power(-1).compose(h4.antipode).is_identity()


class TestIntegrals:
    """Test spaces of integrals."""

    def test_group_algebra_integral(self, kc2, field):
        """Test that 1 + g spans the integrals of kC2."""
        space = kc2.left_integrals()
        assert space.dim == 1
        assert {0: field.one, 1: field.one} in space

    def test_sweedler_integrals_one_dimensional(self, h4):
        """Test that H4 has one-dimensional left and right integrals."""
        assert h4.left_integrals().dim == 1
        assert h4.right_integrals().dim == 1
        assert h4.left_integrals() != h4.right_integrals()


class TestLibrary:
    """Test the library constructors."""

    def test_bad_group_table(self, field):
        """Test that a table without inverses is rejected."""
        with pytest.raises(HopfError):
            group_algebra(field, [[0, 1], [1, 1]])

    def test_identity_must_be_first(self, field):
        """Test that element 0 must be the identity."""
        with pytest.raises(HopfError):
            group_algebra(field, [[1, 0], [0, 1]])

    def test_matrix_group_orders(self, field):
        """Test the closure of a reflection and of a rotation."""
        assert len(matrix_group(field, [[[1, 0], [0, -1]]])) == 2
        assert len(matrix_group(field, [[[0, -1], [1, 0]]])) == 4

    def test_matrix_group_limit(self, field):
        """Test that an infinite group hits the element limit."""
        with pytest.raises(HopfError):
            matrix_group(field, [[[1, 1], [0, 1]]], limit=10)

    def test_matrix_group_algebra_keeps_matrices(self, field):
        """Test that kG remembers its matrices and is a Hopf algebra."""
        H = matrix_group_algebra(field, [[[-1, 0], [0, -1]]])
        assert H.dim == 2
        assert H.group_elements[1] == ((field(-1), field(0)), (field(0), field(-1)))
        assert H.verify().passed
