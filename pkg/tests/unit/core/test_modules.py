"""Unit tests for modules and bimodules."""

from smashcalc.core import Bimodule, FinDimAlgebra, LeftModule, LinearMap, RATIONALS

F = RATIONALS


def _sign():
    return LinearMap.from_rows(F, [[1, 0], [0, -1]])


class TestLeftModule:
    """Test left modules."""

    def test_regular_module(self):
        """Test that the regular module satisfies the module axioms."""
        A = FinDimAlgebra.truncated_polynomial(F, 3)
        M = LeftModule.regular(A)
        assert M.dim == 3
        assert M.check().passed
        assert M.act(A.e(1), A.e(1)) == A.e(2)

    def test_regular_module_isomorphic_to_itself(self):
        """Test that an isomorphism of the regular module is found."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        M = LeftModule.regular(A)
        assert M.is_isomorphic(LeftModule.regular(A))


class TestBimodule:
    """Test bimodules and their isomorphisms."""

    def test_regular_bimodule(self):
        """Test the bimodule axioms on A."""
        A = FinDimAlgebra.truncated_polynomial(F, 3)
        assert Bimodule.regular(A).check().passed

    def test_twisted_bimodule_not_isomorphic(self):
        """Test that the sign twist of k[x]/(x^2) is not isomorphic to A."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        twisted = Bimodule.twisted(A, _sign())
        assert twisted.check().passed
        assert Bimodule.regular(A).find_isomorphism(twisted) is None

    def test_regular_isomorphism_found(self):
        """Test that A ≅ A is certified by an explicit bimodule map."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        R = Bimodule.regular(A)
        f = R.find_isomorphism(Bimodule.regular(A))
        assert f is not None
        assert R.is_isomorphism(f, R)

    def test_direct_sum(self):
        """Test the dimension of A ⊕ A."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        S = Bimodule.regular(A).direct_sum(Bimodule.regular(A))
        assert S.dim == 4
        assert S.check().passed

    def test_enveloping_module(self):
        """Test that a bimodule is a left A^e-module."""
        A = FinDimAlgebra.truncated_polynomial(F, 2)
        M = Bimodule.regular(A).enveloping_module()
        assert M.algebra.dim == 4
        assert M.check().passed
