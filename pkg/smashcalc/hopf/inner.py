"""Inner automorphisms: units u with u·φ(h) = h·u."""

from __future__ import annotations

import logging
from typing import List, Mapping, Optional, Union

from ..core.algebra import FinDimAlgebra
from ..core.field import Scalar
from ..core.linalg import LinearMap, Vec, find_invertible_combination, matrix_from_rows, nullspace, vec_axpy
from .hopf import HopfAlgebra

logger = logging.getLogger(__name__)


def _algebra(obj: Union[FinDimAlgebra, HopfAlgebra]) -> FinDimAlgebra:
    return obj.algebra if isinstance(obj, HopfAlgebra) else obj


def intertwiner_space(obj: Union[FinDimAlgebra, HopfAlgebra], phi: LinearMap) -> List[Vec]:
    """Basis of {u : u·φ(g) = g·u for every generator g}."""
    A = _algebra(obj)
    K = A.field.domain
    rows: List[Vec] = []
    for g in A.generators():
        op = A.right_mult(phi(g)) - A.left_mult(g)
        rows.extend(row for row in op.transpose().cols if row)
    if not rows:
        return [A.e(i) for i in range(A.dim)]
    return nullspace(matrix_from_rows(rows, A.dim, K))


def inner_witness(obj: Union[FinDimAlgebra, HopfAlgebra], phi: LinearMap) -> Optional[Vec]:
    """A unit u with u·φ(h) = h·u for all h, or None when none exists.

    The solution space is linear in u. A unit is picked from it by
    ``find_invertible_combination`` applied to the left multiplication
    matrices of a basis of solutions.
    """
    A = _algebra(obj)
    solutions = intertwiner_space(A, phi)
    if not solutions:
        return None
    coeffs = find_invertible_combination([A.left_mult(u) for u in solutions])
    if coeffs is None:
        logger.debug(f"No invertible intertwiner among {len(solutions)} solutions in {A.name}")
        return None
    u: Vec = {}
    for c, v in zip(coeffs, solutions):
        vec_axpy(u, c, v)
    return u


def is_inner_by(obj: Union[FinDimAlgebra, HopfAlgebra], phi: LinearMap, u: Mapping[int, Scalar]) -> bool:
    A = _algebra(obj)
    return A.is_unit(u) and all(A.product(u, phi(A.e(i))) == A.product(A.e(i), u) for i in range(A.dim))


def conjugation(algebra: FinDimAlgebra, u: Mapping[int, Scalar]) -> LinearMap:
    """h -> u^-1 h u, the automorphism that ``inner_witness`` recovers from u."""
    inv = algebra.inverse(u)
    return LinearMap(algebra.field, algebra.dim, algebra.dim,
                     [algebra.product(algebra.product(inv, algebra.e(i)), u) for i in range(algebra.dim)])
