"""Unit tests for exact sparse linear algebra."""

import pytest

from smashcalc.core import (
    LinearMap,
    RATIONALS,
    SparseTensor,
    Subquotient,
    Subspace,
    find_invertible_combination,
    nullspace,
    rank,
    solve_linear,
)
from smashcalc.core.exceptions import FieldMismatchError, NotInvertibleError, ShapeMismatchError
from smashcalc.core.field import Field

F = RATIONALS


def one(i):
    return {i: F.one}


class TestLinearMap:
    """Test construction and arithmetic of linear maps."""

    def test_from_rows_is_column_major(self):
        """Test that column j holds the image of e_j."""
        M = LinearMap.from_rows(F, [[1, 2], [0, 3]])
        assert M.shape == (2, 2)
        assert M.cols[1] == {0: F(2), 1: F(3)}
        assert M(one(0)) == {0: F(1)}

    def test_ragged_rows_rejected(self):
        """Test that ragged input raises."""
        with pytest.raises(ShapeMismatchError):
            LinearMap.from_rows(F, [[1, 2], [3]])

    def test_compose_and_inverse(self):
        """Test that M∘M⁻¹ is the identity."""
        M = LinearMap.from_rows(F, [[1, 1], [0, 1]])
        assert M.compose(M.inverse()).is_identity()
        assert M.power(-2) == M.inverse().compose(M.inverse())
        assert M.power(0).is_identity()

    def test_singular_inverse(self):
        """Test that a singular map has no inverse."""
        with pytest.raises(NotInvertibleError):
            LinearMap.from_rows(F, [[1, 2], [2, 4]]).inverse()

    def test_compose_shape_mismatch(self):
        """Test that incompatible shapes do not compose."""
        with pytest.raises(ShapeMismatchError):
            LinearMap.identity(F, 2).compose(LinearMap.identity(F, 3))

    def test_kron_and_transpose(self):
        """Test the tensor product ordering and transposition."""
        S = LinearMap.from_rows(F, [[0, 1], [1, 0]])
        T = S.kron(LinearMap.identity(F, 2))
        assert T.shape == (4, 4)
        assert T(one(0)) == one(2)
        assert LinearMap.from_rows(F, [[1, 2]]).transpose() == LinearMap.from_rows(F, [[1], [2]])

    def test_to_rows_formats_entries(self):
        """Test that report matrices are strings."""
        assert LinearMap.from_rows(F, [["1/2", 0]]).to_rows() == [["1/2", "0"]]


class TestSolving:
    """Test rank, kernels and linear systems."""

    def test_solve_consistent_system(self):
        """Test an exact rational solution."""
        M = LinearMap.from_rows(F, [[2, 0], [0, 3]])
        assert solve_linear(M, {0: F(1), 1: F(1)}) == {0: F.element("1/2"), 1: F.element("1/3")}

    def test_solve_inconsistent_system(self):
        """Test that an inconsistent system gives None."""
        M = LinearMap.from_rows(F, [[1, 1], [1, 1]])
        assert solve_linear(M, {0: F(1)}) is None

    def test_solve_rejects_bad_rhs(self):
        """Test that a right-hand side of the wrong length raises."""
        M = SparseTensor.build(F, (2, 2), {(0, 0): 1, (1, 1): 1})
        with pytest.raises(ShapeMismatchError):
            solve_linear(M, SparseTensor.build(F, (3,), {(0,): 1}))

    def test_solve_checks_field(self):
        """Test that every input form is checked against the expected field."""
        M = LinearMap.from_rows(F, [[1, 0], [0, 1]])
        with pytest.raises(FieldMismatchError):
            solve_linear(M.matrix(), {0: F.one}, field=Field(3))
        with pytest.raises(FieldMismatchError):
            solve_linear(M, {0: F.one}, field=Field(3))
        with pytest.raises(FieldMismatchError):
            solve_linear(M.matrix(), SparseTensor.build(Field(3), (2,), {(0,): 1}))
        assert solve_linear(M.matrix(), {1: F(2)}, field=F) == {1: F(2)}

    def test_rank_and_nullspace(self):
        """Test rank–nullity on a rank-one matrix."""
        M = LinearMap.from_rows(F, [[1, 2, 3], [2, 4, 6]])
        assert rank(M) == 1
        kernel = nullspace(M)
        assert len(kernel) == 2
        assert all(not M(v) for v in kernel)


class TestSubspaces:
    """Test subspaces and subquotients."""

    def test_dimension_and_membership(self):
        """Test the span of dependent vectors."""
        W = Subspace(F, 3, [{0: F(1), 1: F(1)}, {0: F(2), 1: F(2)}, one(2)])
        assert W.dim == 2
        assert {0: F(3), 1: F(3), 2: F(1)} in W
        assert one(0) not in W

    def test_intersection(self):
        """Test that two planes in k³ meet in a line."""
        U = Subspace(F, 3, [one(0), one(1)])
        V = Subspace(F, 3, [one(1), one(2)])
        meet = U.intersection(V)
        assert meet.dim == 1
        assert one(1) in meet

    def test_quotient_coordinates(self):
        """Test coordinates in k³ modulo a line."""
        W = Subspace(F, 3, [one(0)])
        assert W.codim == 2
        assert W.quotient_coordinates({0: F(5)}) == {}

    def test_subquotient_dimension(self):
        """Test Z/B for B inside Z."""
        Z = Subspace(F, 3, [one(0), one(1)])
        B = Subspace(F, 3, [one(0)])
        assert Subquotient(Z, B).dim == 1


class TestInvertibleCombination:
    """Test the search for invertible linear combinations."""

    def test_single_invertible_map(self):
        """Test that an invertible member is found directly."""
        maps = [LinearMap.zero(F, 2, 2), LinearMap.identity(F, 2)]
        assert find_invertible_combination(maps) == [F.zero, F.one]

    def test_sum_needed(self):
        """Test that two rank-one projections combine to an invertible map."""
        P = LinearMap.from_rows(F, [[1, 0], [0, 0]])
        Q = LinearMap.from_rows(F, [[0, 0], [0, 1]])
        coeffs = find_invertible_combination([P, Q])
        assert coeffs is not None
        assert all(coeffs)

    def test_none_invertible(self):
        """Test that nilpotent maps never combine to an invertible one."""
        N = LinearMap.from_rows(F, [[0, 1], [0, 0]])
        assert find_invertible_combination([N]) is None

    def test_small_finite_field_enumeration(self):
        """Test the exhaustive scan over F_2."""
        K = Field(2)
        P = LinearMap.from_rows(K, [[1, 0], [0, 0]])
        Q = LinearMap.from_rows(K, [[0, 0], [0, 1]])
        assert find_invertible_combination([P, Q]) == [K.one, K.one]

    def test_determinant_search_backtracks_over_small_prime(self):
        """Test that a point is found over F_2 when the first grid value leads nowhere."""
        K = Field(2)
        # det = c1 c2 (c0 + c1 + c2), zero at every 0/1 point except (1, 1, 1)
        maps = [
            LinearMap.from_rows(K, [[0, 0, 0], [0, 0, 0], [0, 0, 1]]),
            LinearMap.from_rows(K, [[1, 0, 0], [0, 0, 0], [0, 0, 1]]),
            LinearMap.from_rows(K, [[0, 0, 0], [0, 1, 0], [0, 0, 1]]),
        ]
        assert find_invertible_combination(maps, limit=0) == [K.one, K.one, K.one]

    def test_determinant_search_over_rationals(self):
        """Test the polynomial search when pairs do not suffice."""
        maps = [
            LinearMap.from_rows(F, [[1, 0, 0], [0, 0, 0], [0, 0, 0]]),
            LinearMap.from_rows(F, [[0, 0, 0], [0, 1, 0], [0, 0, 0]]),
            LinearMap.from_rows(F, [[0, 0, 0], [0, 0, 0], [0, 0, 1]]),
        ]
        coeffs = find_invertible_combination(maps)
        assert coeffs is not None and all(coeffs)
