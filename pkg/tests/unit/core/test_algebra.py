"""Unit tests for finite-dimensional algebras and their morphisms."""

import pytest

from smashcalc.core import AlgebraMorphism, FinDimAlgebra, LinearMap, RATIONALS, split_tensor, tensor_vectors
from smashcalc.core.exceptions import AlgebraStructureError, NotInvertibleError, ShapeMismatchError

F = RATIONALS


@pytest.fixture
def dual_numbers():
    """k[x]/(x^3) with basis 1, x, x^2."""
    return FinDimAlgebra.truncated_polynomial(F, 3)


def _nonassociative():
    one = F.one
    mul = {(0, j): {j: one} for j in range(3)}
    mul.update({(j, 0): {j: one} for j in range(3)})
    mul[(1, 1)] = {2: one}
    mul[(2, 1)] = {1: one}
    return FinDimAlgebra(F, ["1", "a", "b"], mul, {0: one}, name="broken")


class TestFinDimAlgebra:
    """Test structure constants, products and checks."""

    def test_truncated_polynomial(self, dual_numbers):
        """Test products and degrees in k[x]/(x^3)."""
        A = dual_numbers
        assert A.dim == 3
        assert A.labels == ["1", "x", "x^2"]
        assert A.product(A.e(1), A.e(1)) == A.e(2)
        assert A.product(A.e(1), A.e(2)) == {}
        assert A.degrees == [0, 1, 2]
        assert A.check().passed

    def test_inverse_of_unit(self, dual_numbers):
        """Test (1 + x)^{-1} = 1 - x + x^2."""
        A = dual_numbers
        u = {0: F.one, 1: F.one}
        assert A.inverse(u) == {0: F.one, 1: -F.one, 2: F.one}
        assert A.is_unit(u)

    def test_nilpotent_is_not_unit(self, dual_numbers):
        """Test that x has no inverse."""
        A = dual_numbers
        assert not A.is_unit(A.e(1))
        with pytest.raises(NotInvertibleError):
            A.inverse(A.e(1))

    def test_power_and_format(self, dual_numbers):
        """Test powers and element formatting."""
        A = dual_numbers
        assert A.power(A.e(1), 2) == A.e(2)
        assert A.power(A.e(1), 0) == A.unit
        assert A.format({0: F(2), 1: -F.one}) == "2*1 + -x"
        assert A.format({}) == "0"

    def test_span_closure(self, dual_numbers):
        """Test that x generates k[x]/(x^3)."""
        assert dual_numbers.span_closure([dual_numbers.e(1)]).dim == 3

    def test_commutative_and_central(self, dual_numbers):
        """Test commutativity of a polynomial quotient."""
        assert dual_numbers.is_commutative()
        assert dual_numbers.is_central(dual_numbers.e(2))

    def test_associativity_failure_has_witness(self):
        """Test that a non-associative table is reported with a witness."""
        A = _nonassociative()
        report = A.check()
        assert not report.passed
        failure = report.get("associativity")
        assert failure is not None and failure.witness is not None
        with pytest.raises(AlgebraStructureError):
            A.validate()

    def test_out_of_range_product_rejected(self):
        """Test that structure constants must stay inside the basis."""
        with pytest.raises(ShapeMismatchError):
            FinDimAlgebra(F, ["1"], {(0, 1): {0: F.one}}, {0: F.one})
        with pytest.raises(ShapeMismatchError):
            FinDimAlgebra(F, ["1"], {(0, 0): {3: F.one}}, {0: F.one})

    def test_ground_algebra(self):
        """Test the one-dimensional algebra k."""
        k = FinDimAlgebra.ground(F)
        assert k.dim == 1
        assert k.check().passed


class TestDerivedAlgebras:
    """Test opposite, tensor and enveloping algebras."""

    def test_tensor_dimension_and_unit(self, dual_numbers):
        """Test A ⊗ B on the basis i * dim B + j."""
        B = FinDimAlgebra.truncated_polynomial(F, 2, variable="y")
        T = dual_numbers.tensor(B)
        assert T.dim == 6
        assert T.unit == {0: F.one}
        assert T.labels[2] == "x⊗1"
        assert T.check().passed

    def test_enveloping(self, dual_numbers):
        """Test that A^e has dimension (dim A)^2 and is associative."""
        Ae = dual_numbers.enveloping()
        assert Ae.dim == 9
        assert Ae.check().passed

    def test_tensor_vectors_round_trip(self):
        """Test splitting a tensor of basis vectors."""
        v = tensor_vectors({1: F.one}, {2: F(3)}, 4)
        assert v == {6: F(3)}
        assert split_tensor(v, 4) == {(1, 2): F(3)}


class TestAlgebraMorphism:
    """Test morphism checks."""

    def test_sign_automorphism(self):
        """Test that x ↦ -x is an automorphism of k[x]/(x^2)."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        sign = AlgebraMorphism(A, A, [A.e(0), {1: -F.one}], name="sign")
        assert sign.check().passed
        assert sign.bijective
        assert sign.power(2).is_identity()

    def test_non_multiplicative_map(self):
        """Test that x ↦ 1 is not multiplicative."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        bad = AlgebraMorphism(A, A, [A.e(0), A.e(0)])
        assert not bad.check().get("multiplicative").passed

    def test_from_map_shape(self):
        """Test that a map of the wrong shape is rejected."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        B = FinDimAlgebra.truncated_polynomial(F, 3)
        with pytest.raises(ShapeMismatchError):
            AlgebraMorphism.from_map(A, B, LinearMap.identity(F, 2))
