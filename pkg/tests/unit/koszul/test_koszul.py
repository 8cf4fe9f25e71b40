"""Unit tests for polynomial module algebras and the Koszul oracle."""

import pytest

from smashcalc.core import Field, LinearMap
from smashcalc.hopf import cyclic_group_algebra, matrix_group_algebra
from smashcalc.koszul import (
    KoszulError,
    PolynomialModuleAlgebra,
    graded_cy_smash,
    koszul_resolution,
    monomials,
    poly_top_ext,
)


@pytest.fixture
def reflection(kc2):
    """C2 acting on k[x] by x ↦ -x."""
    return PolynomialModuleAlgebra(1, kc2, [[[1]], [[-1]]], truncation=3)


@pytest.fixture
def rotation(kc2):
    """C2 acting on k[x, y] by -I."""
    return PolynomialModuleAlgebra(2, kc2, [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]], truncation=3)


class TestPolynomialAlgebra:
    """Test the polynomial algebra with its linear action."""

    def test_monomial_order(self):
        """Test the degree-2 monomials in two variables."""
        assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))

    def test_action_on_monomials(self, rotation, field):
        """Test that -I fixes every quadratic monomial."""
        assert rotation.operator(1, 2).is_identity()
        assert rotation.operator(1, 1) == LinearMap.identity(field, 2).scale(-field.one)

    def test_check(self, rotation):
        """Test the module axioms."""
        assert rotation.check().passed

    def test_too_many_variables(self, kc2):
        """Test the variable limit."""
        with pytest.raises(KoszulError):
            PolynomialModuleAlgebra.trivial(9, kc2)

    def test_matrix_count(self, kc2):
        """Test that one matrix per basis element of H is required."""
        with pytest.raises(KoszulError):
            PolynomialModuleAlgebra(1, kc2, [[[1]]])

    def test_from_matrix_group(self, field):
        """Test that a matrix group acts through its own matrices."""
        H = matrix_group_algebra(field, [[[0, 1], [1, 0]]])
        P = PolynomialModuleAlgebra.from_matrix_group(H)
        assert P.n == 2
        assert P.label((1, 1)) == "xy"

    def test_from_matrix_group_needs_matrices(self, kc2):
        """Test that an abstract group is refused."""
        with pytest.raises(KoszulError):
            PolynomialModuleAlgebra.from_matrix_group(kc2)

    def test_truncated_action(self, reflection):
        """Test that the truncated algebra is a module algebra."""
        action = reflection.truncated_action()
        assert action.algebra.dim == 4
        assert action.check().passed


class TestKoszulResolution:
    """Test the Koszul resolution."""

    def test_resolution_certified(self, rotation):
        """Test dimensions, d² = 0, exactness and H-linearity."""
        res = koszul_resolution(rotation)
        assert res.report.passed, str(res.report)
        assert res.length == 2

    def test_top_ext(self, rotation):
        """Test that Ext^2 is free of rank one with μ_A = id."""
        top = poly_top_ext(rotation)
        assert top.passed, str(top.report)
        assert top.degree == 2
        assert top.dims == [1, 2, 3, 4]
        assert top.mu.is_identity()


class TestHomologicalDeterminant:
    """Test hdet and the CY criterion for polynomial smash products."""

    def test_reflection_hdet(self, reflection, field):
        """Test hdet(g) = -1 for a reflection."""
        top = poly_top_ext(reflection)
        assert top.hdet.values == [field.one, -field.one]

    def test_rotation_hdet_trivial(self, rotation):
        """Test hdet = ε for -I in SL2."""
        assert poly_top_ext(rotation).hdet.is_counit()

    def test_reflection_not_cy(self, reflection):
        """Test that k[x]♯kC2 is not CY and the conditions agree."""
        verdict = graded_cy_smash(reflection)
        assert verdict.conditions["b"] is False
        assert verdict.smash_cy is False
        assert verdict.consistent is True

    def test_rotation_cy(self, rotation):
        """Test that k[x, y]♯kC2 for -I is CY."""
        verdict = graded_cy_smash(rotation)
        assert verdict.smash_cy is True
        assert verdict.consistent is True
        assert verdict.report.passed

    def test_modular_group_undetermined(self):
        """Test that char 2 dividing |C2| leaves Λ undetermined."""
        F = Field(2)
        H = cyclic_group_algebra(F, 2)
        P = PolynomialModuleAlgebra(2, H, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], truncation=2)
        verdict = graded_cy_smash(P)
        assert verdict.smash_cy is None
        assert verdict.details["modular"] is True

    def test_sweedler_on_line(self, h4, field):
        """Test the hdet of H4 acting on k[x] by g ↦ -1, x ↦ 0."""
        P = PolynomialModuleAlgebra(1, h4, [[[1]], [[-1]], [[0]], [[0]]], truncation=2)
        top = poly_top_ext(P)
        assert top.hdet.values[1] == -field.one
        assert graded_cy_smash(P).smash_cy is None
